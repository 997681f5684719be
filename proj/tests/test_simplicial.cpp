#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "telhom/homology.hpp"
#include "telhom/simplicial.hpp"

#include <algorithm>

using telhom::ActionError;
using telhom::betti;
using telhom::CellComplex;
using telhom::ChainMap;
using telhom::Group;
using telhom::Quotient;
using telhom::VertexAction;
using telhom::f2::Vector;

namespace {

// antipodal pairs interleaved: (0,1), (2,3), (4,5)
CellComplex octahedron() {
    return CellComplex::from_facets(6, {{0, 2, 4},
                                        {0, 2, 5},
                                        {0, 3, 4},
                                        {0, 3, 5},
                                        {1, 2, 4},
                                        {1, 2, 5},
                                        {1, 3, 4},
                                        {1, 3, 5}});
}

VertexAction antipodal() {
    return {{0, 1, 2, 3, 4, 5}, {1, 0, 3, 2, 5, 4}};
}

CellComplex circle4() {
    return CellComplex::from_facets(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

} // namespace

TEST_CASE("facet closure generates the octahedron") {
    CellComplex x = octahedron();
    CHECK(x.size(0) == 6);
    CHECK(x.size(1) == 12);
    CHECK(x.size(2) == 8);
    CHECK(x.is_simplicial());
    CHECK(betti(*x.chain(), 0) == 1);
    CHECK(betti(*x.chain(), 1) == 0);
    CHECK(betti(*x.chain(), 2) == 1);
    CHECK(x.find(1, {0, 2}).has_value());
    CHECK_FALSE(x.find(1, {0, 1}).has_value());   // antipodes never share a cell
}

TEST_CASE("bad facets are rejected") {
    CHECK_THROWS(CellComplex::from_facets(2, {{0, 5}}));
    CHECK_THROWS(CellComplex::from_facets(3, {{1, 1, 2}}));
}

TEST_CASE("join builds spheres from discrete pairs") {
    CellComplex s0 = CellComplex::discrete(2);
    CellComplex s1 = telhom::join(s0, s0);
    CHECK(s1.size(0) == 4);
    CHECK(s1.size(1) == 4);
    CHECK(betti(*s1.chain(), 0) == 1);
    CHECK(betti(*s1.chain(), 1) == 1);

    CellComplex cone = telhom::join(s1, CellComplex::point());
    CHECK(betti(*cone.chain(), 0) == 1);
    CHECK(betti(*cone.chain(), 1) == 0);
}

TEST_CASE("staircase product counts and homology") {
    CellComplex edge = CellComplex::from_facets(2, {{0, 1}});
    CellComplex sq = telhom::product(edge, edge);
    CHECK(sq.size(0) == 4);
    CHECK(sq.size(1) == 5);   // two sides each way plus the diagonal
    CHECK(sq.size(2) == 2);
    CHECK(betti(*sq.chain(), 0) == 1);
    CHECK(betti(*sq.chain(), 1) == 0);

    CellComplex c = circle4();
    CellComplex torus = telhom::product(c, c);
    CHECK(torus.size(0) == 16);
    CHECK(torus.size(1) == 48);
    CHECK(torus.size(2) == 32);
    CHECK(betti(*torus.chain(), 0) == 1);
    CHECK(betti(*torus.chain(), 1) == 2);
    CHECK(betti(*torus.chain(), 2) == 1);
}

TEST_CASE("vertex maps induce chain maps, repeats map to zero") {
    CellComplex edge = CellComplex::from_facets(2, {{0, 1}});
    CellComplex sq = telhom::product(edge, edge);
    // project (x, y) -> y
    std::vector<std::size_t> pr(4);
    for (std::size_t v = 0; v < 4; ++v) pr[v] = v % 2;
    ChainMap p = telhom::induced_chain_map(sq, edge, pr);
    // horizontal edges collapse, so some degree 1 columns vanish
    bool some_zero = false, some_live = false;
    for (std::size_t e = 0; e < sq.size(1); ++e) {
        if (p.component(1).column(e).is_zero())
            some_zero = true;
        else
            some_live = true;
    }
    CHECK(some_zero);
    CHECK(some_live);
}

TEST_CASE("barycentric subdivision preserves homology and tracks carriers") {
    CellComplex x = octahedron();
    telhom::Subdivision sd = telhom::barycentric(x);
    CHECK(sd.complex.size(0) == 26);
    CHECK(sd.complex.size(1) == 72);
    CHECK(sd.complex.size(2) == 48);
    CHECK(betti(*sd.complex.chain(), 0) == 1);
    CHECK(betti(*sd.complex.chain(), 1) == 0);
    CHECK(betti(*sd.complex.chain(), 2) == 1);

    // sd vertices enumerate the cells of x, carriers remember which
    std::size_t by_dim[3] = {0, 0, 0};
    for (std::size_t i = 0; i < sd.complex.size(0); ++i)
        ++by_dim[sd.carrier[0][i].first];
    CHECK(by_dim[0] == 6);
    CHECK(by_dim[1] == 12);
    CHECK(by_dim[2] == 8);

    // the comparison map is iso on homology in every degree
    for (std::size_t k = 0; k <= 2; ++k) {
        auto hs = telhom::HomologySpace::homology(*sd.complex.chain(), k);
        auto ht = telhom::HomologySpace::homology(*x.chain(), k);
        auto m = telhom::induced_on_homology(sd.flatten, k, hs, ht);
        REQUIRE(m.rows() == m.cols());
        CHECK(telhom::f2::inverse(m).has_value());
    }
}

TEST_CASE("action validation catches broken input") {
    CellComplex x = octahedron();
    Group z2 = Group::cyclic(2);
    CHECK_NOTHROW(telhom::validate_action(x, z2, antipodal()));

    VertexAction not_perm = {{0, 1, 2, 3, 4, 5}, {1, 1, 3, 2, 5, 4}};
    CHECK_THROWS_AS(telhom::validate_action(x, z2, not_perm), ActionError);

    VertexAction not_hom = {{0, 1, 2, 3, 4, 5}, {2, 3, 4, 5, 0, 1}};
    CHECK_THROWS_AS(telhom::validate_action(x, z2, not_hom), ActionError);

    // swapping two adjacent vertices is a permutation but not cellular here
    VertexAction not_cellular = {{0, 1, 2, 3, 4, 5}, {2, 1, 0, 3, 4, 5}};
    CHECK_THROWS_AS(telhom::validate_action(x, z2, not_cellular), ActionError);
}

TEST_CASE("order compatibility and the antipodal quotient") {
    CellComplex x = octahedron();
    Group z2 = Group::cyclic(2);
    CHECK(telhom::action_order_compatible(x, z2, antipodal()));

    Quotient q = telhom::quotient(x, z2, antipodal());
    CHECK(q.sd_rounds == 0);
    CHECK(q.complex.size(0) == 3);
    CHECK(q.complex.size(1) == 6);
    CHECK(q.complex.size(2) == 4);
    CHECK(betti(*q.complex.chain(), 0) == 1);
    CHECK(betti(*q.complex.chain(), 1) == 1);
    CHECK(betti(*q.complex.chain(), 2) == 1);

    // orbit bookkeeping: reps map back onto their orbits
    for (std::size_t k = 0; k <= 2; ++k)
        for (std::size_t o = 0; o < q.complex.size(k); ++o)
            CHECK(q.orbit[k][q.rep[k][o]] == o);
}

TEST_CASE("order twisted free actions subdivide once then quotient") {
    CellComplex c = circle4();
    Group z2 = Group::cyclic(2);
    // half rotation: cellular and free, but the edge {1,2} maps to {3,0},
    // reversing the order of its endpoints
    VertexAction half = {{0, 1, 2, 3}, {2, 3, 0, 1}};
    CHECK_NOTHROW(telhom::validate_action(c, z2, half));
    CHECK_FALSE(telhom::action_order_compatible(c, z2, half));
    Quotient q = telhom::quotient(c, z2, half);
    CHECK(q.sd_rounds == 1);
    CHECK(betti(*q.complex.chain(), 0) == 1);
    CHECK(betti(*q.complex.chain(), 1) == 1);

    Group z4 = Group::cyclic(4);
    VertexAction rot = {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
    Quotient q4 = telhom::quotient(c, z4, rot);
    CHECK(betti(*q4.complex.chain(), 0) == 1);
    CHECK(betti(*q4.complex.chain(), 1) == 1);
    CHECK(q4.complex.size(0) * 4 + 0 == q4.domain.size(0));
}

TEST_CASE("non free actions are refused") {
    CellComplex c = circle4();
    Group z2 = Group::cyclic(2);
    // reflection fixing no vertex but fixing two edges setwise
    VertexAction refl = {{0, 1, 2, 3}, {1, 0, 3, 2}};
    CHECK_THROWS_AS(telhom::quotient(c, z2, refl), ActionError);
    // reflection with fixed vertices
    VertexAction fixed = {{0, 1, 2, 3}, {0, 3, 2, 1}};
    CHECK_THROWS_AS(telhom::quotient(c, z2, fixed), ActionError);
}

TEST_CASE("cup and cap realize the projective plane ring") {
    CellComplex x = octahedron();
    Group z2 = Group::cyclic(2);
    Quotient q = telhom::quotient(x, z2, antipodal());
    const CellComplex& rp2 = q.complex;
    auto chain = rp2.chain();

    auto h1 = telhom::HomologySpace::cohomology(*chain, 1);
    REQUIRE(h1.rank() == 1);
    Vector a = h1.representatives()[0];

    // coboundary squares to zero
    Vector da = telhom::coboundary(rp2, 1, a);
    CHECK(telhom::coboundary(rp2, 2, da).size() == 0);

    // a cup a generates H^2
    Vector aa = telhom::cup(rp2, 1, a, 1, a);
    auto h2 = telhom::HomologySpace::cohomology(*chain, 2);
    REQUIRE(h2.rank() == 1);
    CHECK_FALSE(h2.coordinates(aa).is_zero());

    // cap with the fundamental class sends a to a homology generator
    Vector fund(rp2.size(2));
    for (std::size_t i = 0; i < rp2.size(2); ++i) fund.set(i, true);
    CHECK(chain->boundary(2).apply(fund).is_zero());
    Vector capped = telhom::cap(rp2, 2, fund, 1, a);
    auto hom1 = telhom::HomologySpace::homology(*chain, 1);
    REQUIRE(hom1.rank() == 1);
    CHECK_FALSE(hom1.coordinates(capped).is_zero());
}
