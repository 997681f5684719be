#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "telhom/equivariant.hpp"
#include "telhom/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using telhom::InputError;
using telhom::InputSpec;

namespace {

std::string data(const std::string& name) {
    return std::string(TELHOM_TEST_DATA) + "/" + name;
}

// run the installed binary, return the exit status; stdout and stderr land
// in scratch files under /tmp so assertions can read them back
int run_cli(const std::string& args, const std::string& tag) {
    std::string cmd = std::string(TELHOM_CLI_PATH) + " " + args + " > /tmp/telhom_" + tag +
                      ".out 2> /tmp/telhom_" + tag + ".err";
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    REQUIRE(WIFEXITED(rc));
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("builtin groups") {
    CHECK(telhom::builtin_group("trivial").order() == 1);
    CHECK(telhom::builtin_group("z2").order() == 2);
    CHECK(telhom::builtin_group("z12").order() == 12);
    CHECK(telhom::builtin_group("z2xz2").order() == 4);
    CHECK_THROWS_AS(telhom::builtin_group("z1"), InputError);
    CHECK_THROWS_AS(telhom::builtin_group("z13"), InputError);
    CHECK_THROWS_AS(telhom::builtin_group("sym3"), InputError);
}

TEST_CASE("point input") {
    InputSpec p = telhom::point_input("z2");
    CHECK(p.complex.size(0) == 1);
    CHECK(p.group.order() == 2);
    CHECK(p.action.size() == 2);
    CHECK(p.source == "builtin:point");
    CHECK(telhom::point_input("").group.order() == 1);
}

TEST_CASE("loading good files") {
    InputSpec oct = telhom::load_input(data("octahedron_antipodal.json"));
    CHECK(oct.complex.size(0) == 6);
    CHECK(oct.complex.size(2) == 8);
    CHECK(oct.group.order() == 2);
    CHECK(oct.action.size() == 2);
    CHECK(oct.group_name == "z2");

    InputSpec cust = telhom::load_input(data("custom_group_point.json"));
    CHECK(cust.group.order() == 2);
    CHECK(cust.group.name(1) == "s");

    // identity row may be omitted, the loader fills it in
    InputSpec pt = telhom::load_input(data("point_z2.json"));
    CHECK(pt.action[0] == std::vector<std::size_t>{0});

    // no group at all means the trivial group with its identity action
    InputSpec edge = telhom::load_input(data("plain_edge.json"));
    CHECK(edge.group.order() == 1);
    CHECK(edge.group_name == "trivial");
    CHECK(edge.action.size() == 1);
}

TEST_CASE("group override") {
    InputSpec t = telhom::load_input(data("plain_edge.json"), "trivial");
    CHECK(t.group.order() == 1);
    // a nontrivial override still needs an action from somewhere
    CHECK_THROWS_AS(telhom::load_input(data("plain_edge.json"), "z2"), InputError);
}

TEST_CASE("bad files are refused with input errors") {
    CHECK_THROWS_AS(telhom::load_input(data("no_such_file.json")), InputError);
    CHECK_THROWS_AS(telhom::load_input(data("bad_syntax.json")), InputError);
    CHECK_THROWS_AS(telhom::load_input(data("bad_vertex_range.json")), InputError);
    CHECK_THROWS_AS(telhom::load_input(data("bad_unknown_key.json")), InputError);
    CHECK_THROWS_AS(telhom::load_input(data("bad_missing_action.json")), InputError);
    CHECK_THROWS_AS(telhom::load_input(data("bad_nonperm_action.json")), InputError);
}

TEST_CASE("reports are pure functions of their inputs") {
    InputSpec p = telhom::point_input("z2");
    telhom::EquivariantOptions opt;
    opt.max_degree = 2;
    auto r1 = telhom::equivariant_betti(p.complex, p.group, p.action, opt);
    auto r2 = telhom::equivariant_betti(p.complex, p.group, p.action, opt);
    std::string a = telhom::equivariant_report(p, opt, r1);
    std::string b = telhom::equivariant_report(p, opt, r2);
    CHECK(a == b);
    CHECK(contains(a, "\"stable\""));
    CHECK(contains(a, "\"certified\": true"));
    std::string tsv = telhom::equivariant_tsv(r1, opt.max_degree);
    CHECK(tsv.rfind("degree\t", 0) == 0);
}

TEST_CASE("cli happy path") {
    int rc = run_cli("equivariant --group z2 --max-degree 2", "happy");
    CHECK(rc == 0);
    std::string out = slurp("/tmp/telhom_happy.out");
    CHECK(contains(out, "\"stable\""));
    CHECK(contains(out, "\"certified\": true"));

    rc = run_cli("equivariant --input " + data("point_z2.json") + " --max-degree 1", "file");
    CHECK(rc == 0);

    rc = run_cli("--help", "help");
    CHECK(rc == 0);
}

TEST_CASE("cli input failures exit with two") {
    CHECK(run_cli("equivariant --input " + data("no_such_file.json"), "miss") == 2);
    CHECK(run_cli("equivariant --input " + data("bad_syntax.json"), "syn") == 2);
    CHECK(run_cli("equivariant --input " + data("bad_vertex_range.json"), "rng") == 2);
    CHECK(run_cli("equivariant --input " + data("bad_missing_action.json"), "act") == 2);
    CHECK(run_cli("equivariant --input " + data("bad_nonperm_action.json"), "perm") == 2);
    CHECK(run_cli("equivariant --no-such-flag", "flag") == 2);
    CHECK(run_cli("", "nosub") == 2);
    // free actions are a hard requirement for the orbit comparison
    CHECK(run_cli("kirwan --input " + data("circle_reflection_z2.json") +
                      " --max-degree 1 --stages 2",
                  "fix") == 2);
    // unwritable output path
    CHECK(run_cli("equivariant --group z2 --max-degree 1 --out /no/such/dir/r.json",
                  "dir") == 2);
}

TEST_CASE("cli internal faults exit with one") {
    int rc = run_cli("equivariant --group z2 --max-degree 1 --inject-fault", "fault");
    CHECK(rc == 1);
    CHECK(contains(slurp("/tmp/telhom_fault.err"), "injected fault"));
}

TEST_CASE("cli verify runs its suites") {
    int rc = run_cli("verify --seed 5 --runs 2 --stages 2 --top-degree 2 --max-block 2",
                     "verify");
    CHECK(rc == 0);
    std::string out = slurp("/tmp/telhom_verify.out");
    CHECK(contains(out, "\"identity\""));
    CHECK(contains(out, "\"failures\": 0"));
}

TEST_CASE("cli output files are written atomically and reproducibly") {
    std::string args = "equivariant --group z2 --max-degree 2 --out /tmp/telhom_rep.json "
                       "--tsv /tmp/telhom_rep.tsv";
    REQUIRE(run_cli(args, "w1") == 0);
    std::string first = slurp("/tmp/telhom_rep.json");
    std::string first_tsv = slurp("/tmp/telhom_rep.tsv");
    REQUIRE(run_cli(args, "w2") == 0);
    CHECK(slurp("/tmp/telhom_rep.json") == first);
    CHECK(slurp("/tmp/telhom_rep.tsv") == first_tsv);
    CHECK(first_tsv.rfind("degree\t", 0) == 0);
    CHECK(contains(first, "\"telescope_agrees\": true"));
    std::remove("/tmp/telhom_rep.json");
    std::remove("/tmp/telhom_rep.tsv");
}

TEST_CASE("cli module and kirwan subcommands") {
    int rc = run_cli("module --group z2 --max-degree 2 --action-degree 1", "mod");
    CHECK(rc == 0);
    std::string out = slurp("/tmp/telhom_mod.out");
    CHECK(contains(out, "\"generators\": 1"));

    rc = run_cli("kirwan --input " + data("octahedron_antipodal.json") +
                     " --max-degree 1 --stages 2",
                 "kir");
    CHECK(rc == 0);
    CHECK(contains(slurp("/tmp/telhom_kir.out"), "\"two_sided\": true"));
}
