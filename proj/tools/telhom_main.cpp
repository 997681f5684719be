#include "telhom/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>
#include <string>

namespace {

struct CommonOpts {
    std::string input;
    std::string group;
    std::size_t max_degree = 2;
    std::size_t stages = 0;
    bool morse = false;
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--input", c.input, "JSON description of the space and action");
    cmd->add_option("--group", c.group, "builtin group, overrides the input file");
    cmd->add_option("--max-degree", c.max_degree, "largest homological degree reported");
    cmd->add_option("--stages", c.stages, "approximation stages, 0 = max-degree + 2");
    cmd->add_flag("--morse-reduce", c.morse, "reduce every stage before the telescope");
    cmd->add_option("--out", c.out, "write the JSON report here instead of stdout");
}

telhom::InputSpec load(const CommonOpts& c) {
    if (c.input.empty()) return telhom::point_input(c.group);
    return telhom::load_input(c.input, c.group);
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty())
        std::cout << content;
    else
        telhom::write_text_atomic(path, content);
}

// corrupt a map out of the loaded complex and hand it to the validating
// constructor; always ends in a throw, proving corruption cannot pass
[[noreturn]] void run_fault_injection(const telhom::InputSpec& in) {
    auto chain = in.complex.chain();
    std::vector<telhom::f2::Matrix> comps;
    for (std::size_t k = 0; k <= chain->top_degree(); ++k)
        comps.push_back(telhom::f2::Matrix::identity(chain->dim(k)));
    for (std::size_t k = 0; k <= chain->top_degree(); ++k) {
        if (chain->dim(k) == 0) continue;
        std::vector<telhom::f2::Matrix> bad = comps;
        bad[k].flip(0, 0);
        try {
            telhom::ChainMap probe(chain, chain, std::move(bad));
            (void)probe;
        } catch (const std::exception& e) {
            throw std::runtime_error(std::string("injected fault detected: ") + e.what());
        }
    }
    // no boundary saw the flip (a discrete complex); break a shape instead
    std::vector<telhom::f2::Matrix> bad = comps;
    bad[0] = telhom::f2::Matrix(chain->dim(0) + 1, chain->dim(0));
    try {
        telhom::ChainMap probe(chain, chain, std::move(bad));
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("injected fault detected: ") + e.what());
    }
    throw std::runtime_error("injected fault escaped validation");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant homology of finite group actions through stage telescopes"};
    app.require_subcommand(1);

    CommonOpts eqc, moc, kic;
    std::string tsv_path;
    bool inject_fault = false;
    std::size_t action_degree = 1;

    CLI::App* eq = app.add_subcommand("equivariant", "stagewise equivariant homology");
    add_common(eq, eqc);
    eq->add_option("--tsv", tsv_path, "also write the betti table as TSV");
    eq->add_flag("--inject-fault", inject_fault, "corrupt a map to prove validation trips")
        ->group("");

    CLI::App* mo = app.add_subcommand("module", "action of base cohomology on the last stage");
    add_common(mo, moc);
    mo->add_option("--action-degree", action_degree, "degree of the acting cocycles");

    CLI::App* ki = app.add_subcommand("kirwan", "comparison with the orbit space");
    add_common(ki, kic);

    telhom::VerifyOptions vo;
    std::string verify_out;
    CLI::App* ve = app.add_subcommand("verify", "randomized property suites");
    ve->add_option("--seed", vo.seed, "base seed");
    ve->add_option("--runs", vo.runs, "runs per suite");
    ve->add_option("--stages", vo.stages, "stages per random sequence");
    ve->add_option("--top-degree", vo.top_degree, "top degree of random complexes");
    ve->add_option("--max-block", vo.max_block, "size bound for random homology blocks");
    ve->add_option("--out", verify_out, "write the JSON report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(eq)) {
            telhom::InputSpec in = load(eqc);
            if (inject_fault) run_fault_injection(in);
            telhom::EquivariantOptions opt{eqc.max_degree, eqc.stages, eqc.morse};
            telhom::EquivariantResult r =
                telhom::equivariant_betti(in.complex, in.group, in.action, opt);
            emit(eqc.out, telhom::equivariant_report(in, opt, r));
            if (!tsv_path.empty())
                telhom::write_text_atomic(tsv_path, telhom::equivariant_tsv(r, opt.max_degree));
        } else if (app.got_subcommand(mo)) {
            telhom::InputSpec in = load(moc);
            telhom::EquivariantOptions opt{moc.max_degree, moc.stages, moc.morse};
            telhom::ModuleActionResult r =
                telhom::module_action(in.complex, in.group, in.action, action_degree, opt);
            emit(moc.out, telhom::module_report(in, opt, r));
        } else if (app.got_subcommand(ki)) {
            telhom::InputSpec in = load(kic);
            telhom::EquivariantOptions opt{kic.max_degree, kic.stages, kic.morse};
            telhom::KirwanResult r =
                telhom::kirwan_comparison(in.complex, in.group, in.action, opt);
            emit(kic.out, telhom::kirwan_report(in, opt, r));
        } else {
            std::vector<telhom::SuiteResult> suites = telhom::verify_all(vo);
            emit(verify_out, telhom::verify_report(vo, suites));
            for (const telhom::SuiteResult& s : suites)
                if (!s.ok()) {
                    std::cerr << "verification failed: " << s.name << " (" << s.detail
                              << ")\n";
                    return 1;
                }
        }
        return 0;
    } catch (const telhom::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const telhom::ActionError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
