#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "telhom/equivariant.hpp"

using telhom::CellComplex;
using telhom::EquivariantOptions;
using telhom::EquivariantResult;
using telhom::Group;
using telhom::VertexAction;
using telhom::f2::Matrix;

namespace {

CellComplex circle4() {
    return CellComplex::from_facets(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

VertexAction identity_on(std::size_t n, std::size_t order) {
    std::vector<std::size_t> id(n);
    for (std::size_t v = 0; v < n; ++v) id[v] = v;
    return VertexAction(order, id);
}

} // namespace

TEST_CASE("stage policy") {
    EquivariantOptions opt;
    opt.max_degree = 2;
    CHECK(telhom::resolve_stages(opt) == 4);
    opt.stages = 7;
    CHECK(telhom::resolve_stages(opt) == 7);
}

TEST_CASE("trivial group reduces to plain homology") {
    EquivariantOptions opt;
    opt.max_degree = 2;
    EquivariantResult r = telhom::equivariant_betti(
        circle4(), Group::trivial(), identity_on(4, 1), opt);
    CHECK(r.stable == std::vector<std::size_t>{1, 1, 0});
    CHECK(r.certified);
    CHECK(r.telescope_agrees);
    CHECK(r.telescope_betti == r.stable);
}

TEST_CASE("two element group acting on a point") {
    EquivariantOptions opt;
    opt.max_degree = 2;
    EquivariantResult r = telhom::equivariant_betti(
        CellComplex::point(), Group::cyclic(2), identity_on(1, 2), opt);
    CHECK(r.stages == 4);
    CHECK(r.stable == std::vector<std::size_t>{1, 1, 1});
    CHECK(r.certified);
    CHECK(r.certificate == std::vector<bool>{true, true, true});
    CHECK(r.telescope_agrees);
    REQUIRE(r.stage_betti.size() == 5);
    // every stage already shows the stable answer in degrees below its index
    CHECK(r.stage_betti[2][0] == 1);
    CHECK(r.stage_betti[2][1] == 1);

    SUBCASE("morse mode reports the same numbers with fewer cells") {
        opt.morse_reduce = true;
        EquivariantResult m = telhom::equivariant_betti(
            CellComplex::point(), Group::cyclic(2), identity_on(1, 2), opt);
        CHECK(m.morse);
        CHECK(m.cells_after < m.cells_before);
        CHECK(m.stable == r.stable);
        CHECK(m.telescope_betti == r.telescope_betti);
        CHECK(m.stage_betti == r.stage_betti);
        CHECK(m.certified);
        CHECK(m.telescope_agrees);
    }
}

TEST_CASE("three element group acting on a point has trivial mod two answer") {
    EquivariantOptions opt;
    opt.max_degree = 2;
    EquivariantResult r = telhom::equivariant_betti(
        CellComplex::point(), Group::cyclic(3), identity_on(1, 3), opt);
    CHECK(r.stable == std::vector<std::size_t>{1, 0, 0});
    CHECK(r.certified);
    CHECK(r.telescope_agrees);
}

TEST_CASE("module action of the degree one class over the two element group") {
    EquivariantOptions opt;
    opt.max_degree = 3;
    auto pt = CellComplex::point();
    Group z2 = Group::cyclic(2);
    auto act = identity_on(1, 2);

    auto r1 = telhom::module_action(pt, z2, act, 1, opt);
    CHECK(r1.generators == 1);
    CHECK(r1.homology_rank == std::vector<std::size_t>{1, 1, 1, 1});
    REQUIRE(r1.matrices.size() == 1);
    REQUIRE(r1.matrices[0].size() == 3);   // degrees 1, 2, 3 map down by one
    for (const Matrix& m : r1.matrices[0]) {
        CHECK(m.rows() == 1);
        CHECK(m.cols() == 1);
        CHECK(telhom::f2::rank(m) == 1);
    }

    // the square of the generator acts as the composite of two single steps
    auto r2 = telhom::module_action(pt, z2, act, 2, opt);
    CHECK(r2.generators == 1);
    REQUIRE(r2.matrices[0].size() == 2);   // degrees 2, 3 map down by two
    for (std::size_t j = 2; j <= 3; ++j) {
        Matrix twice = r1.matrices[0][j - 1 - 1] * r1.matrices[0][j - 1];
        CHECK(r2.matrices[0][j - 2] == twice);
    }

    CHECK_THROWS(telhom::module_action(pt, z2, act, 0, opt));
    CHECK_THROWS(telhom::module_action(pt, z2, act, 4, opt));
}

TEST_CASE("orbit comparison for the antipodal sphere") {
    CellComplex x = CellComplex::from_facets(6, {{0, 2, 4},
                                                 {0, 2, 5},
                                                 {0, 3, 4},
                                                 {0, 3, 5},
                                                 {1, 2, 4},
                                                 {1, 2, 5},
                                                 {1, 3, 4},
                                                 {1, 3, 5}});
    VertexAction anti = {{0, 1, 2, 3, 4, 5}, {1, 0, 3, 2, 5, 4}};
    EquivariantOptions opt;
    opt.max_degree = 1;
    opt.stages = 2;   // comparison is iso strictly below the stage count
    auto k = telhom::kirwan_comparison(x, Group::cyclic(2), anti, opt);
    CHECK(k.orbit_betti == std::vector<std::size_t>{1, 1});
    CHECK(k.stage_betti == std::vector<std::size_t>{1, 1});
    CHECK(k.iso == std::vector<bool>{true, true});
    CHECK(k.two_sided);
    for (std::size_t j = 0; j <= 1; ++j) {
        CHECK(k.comparison[j].rows() == k.comparison[j].cols());
        CHECK(k.inverse[j] * k.comparison[j] ==
              Matrix::identity(k.comparison[j].cols()));
    }

    // fixed points make the comparison meaningless and are refused
    VertexAction refl = {{0, 1, 2, 3, 4, 5}, {0, 1, 3, 2, 5, 4}};
    CHECK_THROWS_AS(telhom::kirwan_comparison(x, Group::cyclic(2), refl, opt),
                    telhom::ActionError);
}
