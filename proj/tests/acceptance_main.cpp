// End to end acceptance gate: each criterion prints one PASS or FAIL line
// with its wall time and the binary exits nonzero if anything failed.

#include "oracle.hpp"
#include "telhom/borel.hpp"
#include "telhom/equivariant.hpp"
#include "telhom/io.hpp"
#include "telhom/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace telhom;

namespace {

int g_failures = 0;

void criterion(const std::string& name, double budget_s,
               const std::function<std::string()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string err;
    try {
        err = body();
    } catch (const std::exception& e) {
        err = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (err.empty() && dt > budget_s) {
        std::ostringstream ss;
        ss << "over budget: " << dt << " s > " << budget_s << " s";
        err = ss.str();
    }
    if (err.empty()) {
        std::printf("[PASS] %s (%.1f s)\n", name.c_str(), dt);
    } else {
        std::printf("[FAIL] %s (%.1f s): %s\n", name.c_str(), dt, err.c_str());
        ++g_failures;
    }
    std::fflush(stdout);
}

std::string check(bool ok, const std::string& msg) { return ok ? "" : msg; }

std::string fmt_vec(const std::vector<std::size_t>& v) {
    std::ostringstream ss;
    ss << "[";
    for (std::size_t i = 0; i < v.size(); ++i) ss << (i ? "," : "") << v[i];
    ss << "]";
    return ss.str();
}

std::string expect_stable(const EquivariantResult& r, const std::vector<std::size_t>& want) {
    if (r.stable != want)
        return "stable " + fmt_vec(r.stable) + " wanted " + fmt_vec(want);
    if (!r.certified) return "stabilization certificate failed";
    if (!r.telescope_agrees)
        return "telescope betti " + fmt_vec(r.telescope_betti) + " disagree";
    return "";
}

VertexAction trivial_action(std::size_t verts, std::size_t order) {
    std::vector<std::size_t> id(verts);
    for (std::size_t v = 0; v < verts; ++v) id[v] = v;
    return VertexAction(order, id);
}

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

std::string data_file(const char* name) {
    return std::string(TELHOM_TEST_DATA) + "/" + name;
}

// plain runs stashed for the morse comparison criterion
struct Stored {
    CellComplex space;
    Group group;
    VertexAction action;
    EquivariantOptions opt;
    EquivariantResult plain;
};
std::vector<Stored> g_runs;

std::string run_and_store(const CellComplex& x, const Group& g, const VertexAction& a,
                          const EquivariantOptions& opt,
                          const std::vector<std::size_t>& want) {
    EquivariantResult r = equivariant_betti(x, g, a, opt);
    std::string err = expect_stable(r, want);
    if (err.empty()) g_runs.push_back(Stored{x, g, a, opt, r});
    return err;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) return "<unreadable:" + path + ">";
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int spawn(const std::string& args) {
    std::string cmd = std::string(TELHOM_CLI_PATH) + " " + args;
    int rc = std::system(cmd.c_str());
    if (rc == -1 || !WIFEXITED(rc)) return -1;
    return WEXITSTATUS(rc);
}

} // namespace

int main() {
    criterion("1. identity morphisms verify over 200 random telescopes", 60.0, [] {
        VerifyOptions vo;
        vo.seed = 101;
        vo.runs = 200;
        SuiteResult s = verify_identity(vo);
        return check(s.ok(), s.detail);
    });

    criterion("2. every random telescope retracts onto its last stage, 100 runs", 30.0, [] {
        VerifyOptions vo;
        vo.seed = 202;
        vo.runs = 100;
        SuiteResult s = verify_retraction(vo);
        return check(s.ok(), s.detail);
    });

    criterion("3. two element group on a point: rank one in degrees 0..4, certified,"
              " against a dense oracle", 120.0, [] {
        EquivariantOptions opt;
        opt.max_degree = 4;
        std::string err = run_and_store(CellComplex::point(), Group::cyclic(2),
                                        trivial_action(1, 2), opt, {1, 1, 1, 1, 1});
        if (!err.empty()) return err;
        const EquivariantResult& r = g_runs.back().plain;
        if (r.stages > 6) return std::string("stage count exceeds 6");
        // recompute the last stage with naive dense elimination
        BorelSequence bs = borel_sequence(CellComplex::point(), Group::cyclic(2),
                                          trivial_action(1, 2), r.stages);
        const ChainComplex& last = bs.stage_chains.stage(r.stages);
        for (std::size_t j = 0; j <= 4; ++j)
            if (oracle::betti(last, j) != r.stable[j])
                return std::string("oracle disagrees in degree ") + std::to_string(j);
        return std::string();
    });

    criterion("4. three element group on a point: trivial reduced answer", 120.0, [] {
        EquivariantOptions opt;
        opt.max_degree = 3;
        return run_and_store(CellComplex::point(), Group::cyclic(3), trivial_action(1, 3),
                             opt, {1, 0, 0, 0});
    });

    criterion("5. Klein four group on a point: polynomial growth 1, 2, 3", 300.0, [] {
        EquivariantOptions opt;
        opt.max_degree = 2;
        return run_and_store(CellComplex::point(), Group::klein_four(),
                             trivial_action(1, 4), opt, {1, 2, 3});
    });

    criterion("6. trivial involution on a circle: product with projective space", 120.0, [] {
        InputSpec in = load_input(data_file("circle_trivial_z2.json"));
        EquivariantOptions opt;
        opt.max_degree = 2;
        return run_and_store(in.complex, in.group, in.action, opt, {1, 2, 2});
    });

    criterion("7. antipodal sphere: lens like answer plus orbit comparison", 300.0, [] {
        VertexAction anti = {{0, 1, 2, 3, 4, 5}, {1, 0, 3, 2, 5, 4}};
        EquivariantOptions opt;
        opt.max_degree = 2;
        std::string err =
            run_and_store(octahedron(), Group::cyclic(2), anti, opt, {1, 1, 1});
        if (!err.empty()) return err;
        EquivariantOptions kopt;
        kopt.max_degree = 2;
        kopt.stages = 3;
        KirwanResult k = kirwan_comparison(octahedron(), Group::cyclic(2), anti, kopt);
        if (k.orbit_betti != std::vector<std::size_t>{1, 1, 1})
            return "orbit betti " + fmt_vec(k.orbit_betti);
        for (std::size_t j = 0; j <= 2; ++j)
            if (!k.iso[j]) return std::string("comparison not iso in degree ") + std::to_string(j);
        return check(k.two_sided, "inverse fails on one side");
    });

    criterion("8. module structure over the two element group: degree one class acts"
              " with rank one and squares correctly", 300.0, [] {
        EquivariantOptions opt;
        opt.max_degree = 3;
        auto pt = CellComplex::point();
        Group z2 = Group::cyclic(2);
        VertexAction act = trivial_action(1, 2);
        ModuleActionResult r1 = module_action(pt, z2, act, 1, opt);
        if (r1.generators != 1) return std::string("generator count off");
        for (std::size_t idx = 0; idx < r1.matrices[0].size(); ++idx)
            if (f2::rank(r1.matrices[0][idx]) != 1)
                return std::string("action rank off in slot ") + std::to_string(idx);
        ModuleActionResult r2 = module_action(pt, z2, act, 2, opt);
        if (r2.generators != 1) return std::string("square generator count off");
        for (std::size_t j = 2; j <= 3; ++j) {
            f2::Matrix twice = r1.matrices[0][j - 2] * r1.matrices[0][j - 1];
            if (!(r2.matrices[0][j - 2] == twice))
                return std::string("square law fails from degree ") + std::to_string(j);
        }
        return std::string();
    });

    criterion("9. morse reduction changes cell counts, never answers", 600.0, [] {
        if (g_runs.size() != 5) return std::string("earlier criteria did not all pass");
        for (const Stored& s : g_runs) {
            EquivariantOptions opt = s.opt;
            opt.morse_reduce = true;
            EquivariantResult m = equivariant_betti(s.space, s.group, s.action, opt);
            if (m.stable != s.plain.stable || m.stage_betti != s.plain.stage_betti ||
                m.telescope_betti != s.plain.telescope_betti ||
                m.certified != s.plain.certified ||
                m.telescope_agrees != s.plain.telescope_agrees)
                return "reduced run disagrees with the plain run, stable " +
                       fmt_vec(s.plain.stable);
            if (!(m.cells_after < m.cells_before))
                return std::string("no strict reduction: ") +
                       std::to_string(m.cells_after) + " vs " +
                       std::to_string(m.cells_before);
        }
        return std::string();
    });

    criterion("10. command line runs are byte for byte reproducible", 120.0, [] {
        std::string eq = "equivariant --input " + data_file("circle_trivial_z2.json") +
                         " --max-degree 1 --stages 2 --out /tmp/telhom_acc.json"
                         " --tsv /tmp/telhom_acc.tsv > /dev/null 2>&1";
        std::string mo = "module --group z2 --max-degree 2 --action-degree 1"
                         " > /tmp/telhom_acc_mod.out 2>&1";
        if (spawn(eq) != 0) return std::string("first equivariant run failed");
        std::string j1 = slurp("/tmp/telhom_acc.json"), t1 = slurp("/tmp/telhom_acc.tsv");
        if (spawn(mo) != 0) return std::string("first module run failed");
        std::string m1 = slurp("/tmp/telhom_acc_mod.out");
        if (spawn(eq) != 0) return std::string("second equivariant run failed");
        if (spawn(mo) != 0) return std::string("second module run failed");
        if (slurp("/tmp/telhom_acc.json") != j1) return std::string("JSON report drifted");
        if (slurp("/tmp/telhom_acc.tsv") != t1) return std::string("TSV drifted");
        if (slurp("/tmp/telhom_acc_mod.out") != m1) return std::string("module report drifted");
        std::remove("/tmp/telhom_acc.json");
        std::remove("/tmp/telhom_acc.tsv");
        std::remove("/tmp/telhom_acc_mod.out");
        return std::string();
    });

    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
