#include "telhom/verify.hpp"

#include "telhom/homology.hpp"
#include "telhom/morse.hpp"

#include <algorithm>
#include <exception>
#include <memory>
#include <utility>

namespace telhom {

namespace {

// body returns an empty string on success, a description on failure; thrown
// exceptions count as failures too (constructors validate aggressively)
template <typename Fn>
SuiteResult run_suite(std::string name, const VerifyOptions& opt, Fn&& body) {
    SuiteResult res;
    res.name = std::move(name);
    for (std::size_t r = 0; r < opt.runs; ++r) {
        ++res.runs;
        std::uint64_t seed = opt.seed + r;
        std::string fail;
        try {
            Rng rng(seed);
            fail = body(rng);
        } catch (const std::exception& e) {
            fail = e.what();
        }
        if (!fail.empty()) {
            ++res.failures;
            if (res.detail.empty())
                res.detail = "seed " + std::to_string(seed) + ": " + fail;
        }
    }
    return res;
}

std::vector<std::size_t> betti_vector(const ChainComplex& c, std::size_t upto) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k <= upto; ++k) out.push_back(betti(c, k));
    return out;
}

} // namespace

SuiteResult verify_identity(const VerifyOptions& opt) {
    return run_suite("identity", opt, [&](Rng& rng) -> std::string {
        ComplexSequence seq =
            random_sequence(rng, opt.stages, opt.top_degree, opt.max_block);
        TelescopeComplex tel = build_telescope(seq);
        ChainMap assembled = telescope_map(TelescopeMorphism::identity(seq), tel, tel);
        if (!(assembled == ChainMap::identity(tel.complex_ptr())))
            return "telescope of the identity is not the identity";
        return "";
    });
}

SuiteResult verify_retraction(const VerifyOptions& opt) {
    return run_suite("retraction", opt, [&](Rng& rng) -> std::string {
        ComplexSequence seq =
            random_sequence(rng, opt.stages, opt.top_degree, opt.max_block);
        TelescopeComplex tel = build_telescope(seq);
        std::size_t upto = tel.complex().top_degree();
        if (betti_vector(tel.complex(), upto) !=
            betti_vector(seq.stage(seq.stage_count() - 1), upto))
            return "telescope homology differs from the last stage";
        return "";
    });
}

SuiteResult verify_functoriality(const VerifyOptions& opt) {
    return run_suite("functoriality", opt, [&](Rng& rng) -> std::string {
        ComplexSequence a = random_sequence(rng, opt.stages, opt.top_degree, opt.max_block);
        ComplexSequence b = random_sequence(rng, opt.stages, opt.top_degree, opt.max_block);
        ComplexSequence c = random_sequence(rng, opt.stages, opt.top_degree, opt.max_block);
        TelescopeMorphism f = random_telescope_morphism(rng, a, b);
        TelescopeMorphism g = random_telescope_morphism(rng, b, c);
        TelescopeComplex ta = build_telescope(a);
        TelescopeComplex tb = build_telescope(b);
        TelescopeComplex tc = build_telescope(c);
        ChainMap lhs = telescope_map(g.compose_after(f), ta, tc);
        ChainMap rhs = telescope_map(g, tb, tc).compose_after(telescope_map(f, ta, tb));
        if (!(lhs == rhs)) return "composition law fails";
        ChainMap unit = telescope_map(f.compose_after(TelescopeMorphism::identity(a)), ta, tb);
        if (!(unit == telescope_map(f, ta, tb))) return "unit law fails";
        return "";
    });
}

SuiteResult verify_homotopy(const VerifyOptions& opt) {
    return run_suite("homotopy", opt, [&](Rng& rng) -> std::string {
        ComplexSequence a = random_sequence(rng, opt.stages, opt.top_degree, opt.max_block);
        ComplexSequence b = random_sequence(rng, opt.stages, opt.top_degree, opt.max_block);
        HomotopicPair p = random_homotopic_pair(rng, a, b);
        TelescopeComplex ta = build_telescope(a);
        TelescopeComplex tb = build_telescope(b);
        ChainMap f0 = telescope_map(p.first, ta, tb);
        ChainMap f1 = telescope_map(p.second, ta, tb);
        ChainHomotopy h = telescope_homotopy(p.datum, ta, tb);
        if (!validate_homotopy(h, f0, f1)) return "assembled homotopy fails the relation";
        return "";
    });
}

SuiteResult verify_product(const VerifyOptions& opt) {
    return run_suite("product", opt, [&](Rng& rng) -> std::string {
        // tensor sizes grow fast, keep the factors small
        std::size_t top = std::min<std::size_t>(opt.top_degree, 2);
        std::size_t block = std::min<std::size_t>(opt.max_block, 2);
        ComplexSequence a = random_sequence(rng, opt.stages, top, block);
        ComplexSequence b = random_sequence(rng, opt.stages, top, block);
        TelescopeComplex ta = build_telescope(a);
        TelescopeComplex tb = build_telescope(b);
        TelescopeProduct tp = telescope_product(ta, tb);
        if (!(*tp.source == tensor_product(ta.complex(), tb.complex())))
            return "pairing source is not the tensor of the telescopes";
        TelescopeProduct again = telescope_product(ta, tb);
        if (!(tp.map == again.map)) return "pairing is not deterministic";
        return "";
    });
}

SuiteResult verify_shift(const VerifyOptions& opt) {
    return run_suite("shift", opt, [&](Rng& rng) -> std::string {
        // conjugate one complex by random bases so every increment is an
        // isomorphism; the shift must then be an equivalence
        RandomComplex base = random_chain_complex(rng, opt.top_degree, opt.max_block);
        const ChainComplex& bc = *base.complex;
        std::size_t top = bc.top_degree();
        std::size_t s = std::max<std::size_t>(opt.stages, 2);
        std::vector<std::shared_ptr<const ChainComplex>> cs;
        std::vector<std::vector<f2::Matrix>> w(s), winv(s);
        for (std::size_t n = 0; n < s; ++n) {
            w[n].resize(top + 1);
            winv[n].resize(top + 1);
            for (std::size_t k = 0; k <= top; ++k)
                w[n][k] = random_invertible(rng, bc.dim(k), &winv[n][k]);
            std::vector<f2::Matrix> bnd;
            for (std::size_t k = 0; k < top; ++k)
                bnd.push_back(w[n][k] * bc.boundary(k + 1) * winv[n][k + 1]);
            cs.push_back(std::make_shared<ChainComplex>(bc.dims(), std::move(bnd)));
        }
        std::vector<ChainMap> inc;
        for (std::size_t n = 0; n + 1 < s; ++n) {
            std::vector<f2::Matrix> comps;
            for (std::size_t k = 0; k <= top; ++k)
                comps.push_back(w[n + 1][k] * winv[n][k]);
            inc.emplace_back(cs[n], cs[n + 1], std::move(comps));
        }
        TelescopeComplex tel = build_telescope(ComplexSequence(std::move(cs), std::move(inc)));
        if (!shift_is_quasi_iso(tel)) return "shift fails on a stabilized sequence";
        return "";
    });
}

SuiteResult verify_morse(const VerifyOptions& opt) {
    return run_suite("morse", opt, [&](Rng& rng) -> std::string {
        RandomComplex rc = random_chain_complex(rng, opt.top_degree, opt.max_block);
        Reduction r = reduce(*rc.complex);
        if (r.reduced->total_dim() > rc.complex->total_dim()) return "reduction grew";
        for (std::size_t k = 0; k <= opt.top_degree; ++k)
            if (betti(*r.reduced, k) != rc.betti[k])
                return "reduced complex has wrong homology at degree " + std::to_string(k);
        return "";
    });
}

std::vector<SuiteResult> verify_all(const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    out.push_back(verify_identity(opt));
    out.push_back(verify_retraction(opt));
    out.push_back(verify_functoriality(opt));
    out.push_back(verify_homotopy(opt));
    out.push_back(verify_product(opt));
    out.push_back(verify_shift(opt));
    out.push_back(verify_morse(opt));
    return out;
}

} // namespace telhom
