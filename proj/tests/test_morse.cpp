#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "telhom/genrandom.hpp"
#include "telhom/morse.hpp"
#include "telhom/simplicial.hpp"

using telhom::betti;
using telhom::CellComplex;
using telhom::ChainComplex;
using telhom::ChainMap;
using telhom::Reduction;
using telhom::f2::Matrix;

namespace {

void check_reduction(const Reduction& r) {
    const ChainComplex& a = *r.original;
    const ChainComplex& b = *r.reduced;
    for (std::size_t k = 0; k <= a.top_degree(); ++k)
        CHECK(betti(a, k) == betti(b, k));
    // project . include is the identity of the reduced complex
    ChainMap pi = r.project.compose_after(r.include);
    for (std::size_t k = 0; k <= b.top_degree(); ++k)
        CHECK(pi.component(k) == Matrix::identity(b.dim(k)));
    // include . project is homotopic to the identity of the original
    ChainMap ip = r.include.compose_after(r.project);
    CHECK(telhom::validate_homotopy(r.homotopy, ChainMap::identity(r.original), ip));
}

} // namespace

TEST_CASE("circle reduces to one vertex and one edge worth of homology") {
    CellComplex c = CellComplex::from_facets(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    auto chain = c.chain();
    telhom::MorseMatching m = telhom::greedy_matching(*chain);
    CHECK(m.pair_count() >= 1);
    Reduction r = telhom::reduce(*chain, m);
    check_reduction(r);
    CHECK(r.reduced->total_dim() < chain->total_dim());
    CHECK(betti(*r.reduced, 0) == 1);
    CHECK(betti(*r.reduced, 1) == 1);
}

TEST_CASE("octahedron shrinks strictly with homology intact") {
    CellComplex x = CellComplex::from_facets(6, {{0, 2, 4},
                                                 {0, 2, 5},
                                                 {0, 3, 4},
                                                 {0, 3, 5},
                                                 {1, 2, 4},
                                                 {1, 2, 5},
                                                 {1, 3, 4},
                                                 {1, 3, 5}});
    auto chain = x.chain();
    Reduction r = telhom::reduce(*chain);
    check_reduction(r);
    CHECK(r.reduced->total_dim() < chain->total_dim());
    CHECK(betti(*r.reduced, 0) == 1);
    CHECK(betti(*r.reduced, 1) == 0);
    CHECK(betti(*r.reduced, 2) == 1);
}

TEST_CASE("cyclic matchings are rejected") {
    // two vertices, two edges, every boundary coefficient 1: cancelling one
    // pair kills the coefficient the other pair needs
    Matrix d1(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) d1.set(i, j, true);
    ChainComplex c({2, 2}, {d1});
    telhom::MorseMatching m;
    m.pairs = {{{0, 0}, {1, 1}}};
    CHECK(m.pair_count() == 2);
    CHECK_THROWS(telhom::reduce(c, m));
}

TEST_CASE("pairs with even incidence are rejected") {
    ChainComplex c({1, 1}, {Matrix(1, 1)});
    telhom::MorseMatching m;
    m.pairs = {{{0, 0}}};
    CHECK_THROWS(telhom::reduce(c, m));
}

TEST_CASE("random complexes reduce without growth") {
    for (std::uint64_t seed = 900; seed < 912; ++seed) {
        telhom::Rng rng(seed);
        telhom::RandomComplex rc = telhom::random_chain_complex(rng, 3, 3);
        Reduction r = telhom::reduce(*rc.complex);
        check_reduction(r);
        CHECK(r.reduced->total_dim() <= rc.complex->total_dim());
        for (std::size_t k = 0; k < rc.betti.size(); ++k)
            CHECK(betti(*r.reduced, k) == rc.betti[k]);
    }
}
