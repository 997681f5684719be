#include "telhom/equivariant.hpp"

#include <memory>
#include <optional>
#include <stdexcept>

namespace telhom {

std::size_t resolve_stages(const EquivariantOptions& opt) {
    std::size_t k = opt.stages ? opt.stages : opt.max_degree + 2;
    if (k == 0) throw std::invalid_argument("stage count must be positive");
    return k;
}

namespace {

std::vector<std::size_t> betti_upto(const ChainComplex& c, std::size_t maxd) {
    std::vector<std::size_t> rk(maxd + 3, 0);
    for (std::size_t j = 1; j <= maxd + 1; ++j) rk[j] = f2::rank(c.boundary(j));
    std::vector<std::size_t> out(maxd + 1);
    for (std::size_t j = 0; j <= maxd; ++j) out[j] = c.dim(j) - rk[j] - rk[j + 1];
    return out;
}

ComplexSequence trivial_sequence(const CellComplex& x, std::size_t stages) {
    std::vector<std::shared_ptr<const ChainComplex>> s(stages + 1, x.chain());
    std::vector<ChainMap> inc(stages, ChainMap::identity(x.chain()));
    return ComplexSequence(std::move(s), std::move(inc));
}

} // namespace

EquivariantResult equivariant_betti(const CellComplex& x, const Group& g,
                                    const VertexAction& action,
                                    const EquivariantOptions& opt) {
    std::size_t K = resolve_stages(opt);
    EquivariantResult res;
    res.stages = K;
    res.morse = opt.morse_reduce;

    std::unique_ptr<ComplexSequence> seq;
    if (g.order() == 1) {
        validate_action(x, g, action);
        seq = std::make_unique<ComplexSequence>(trivial_sequence(x, K));
    } else {
        BorelSequence bs = borel_sequence(x, g, action, K);
        res.sd_rounds = bs.sd_rounds;
        seq = std::make_unique<ComplexSequence>(bs.stage_chains);
    }

    for (std::size_t n = 0; n <= K; ++n) {
        res.stage_dims.push_back(seq->stage(n).dims());
        res.stage_betti.push_back(betti_upto(seq->stage(n), opt.max_degree));
    }
    res.stable = res.stage_betti.back();

    // certificate: the last increment must be an isomorphism on homology in
    // every reported degree
    const ChainMap& last = seq->increment(K - 1);
    res.certified = true;
    for (std::size_t j = 0; j <= opt.max_degree; ++j) {
        HomologySpace hs = HomologySpace::homology(seq->stage(K - 1), j);
        HomologySpace ht = HomologySpace::homology(seq->stage(K), j);
        bool iso = hs.rank() == ht.rank();
        if (iso && hs.rank() > 0) {
            f2::Matrix m = induced_on_homology(last, j, hs, ht);
            iso = f2::inverse(m).has_value();
        }
        res.certificate.push_back(iso);
        res.certified = res.certified && iso;
    }

    if (!opt.morse_reduce) {
        TelescopeComplex tel = build_telescope(*seq);
        res.telescope_betti = betti_upto(tel.complex(), opt.max_degree);
    } else {
        std::vector<Reduction> red;
        for (std::size_t n = 0; n <= K; ++n) {
            red.push_back(reduce(seq->stage(n)));
            res.cells_before += seq->stage(n).total_dim();
            res.cells_after += red.back().reduced->total_dim();
        }
        std::vector<std::shared_ptr<const ChainComplex>> rstages;
        std::vector<ChainMap> rinc;
        for (std::size_t n = 0; n <= K; ++n) rstages.push_back(red[n].reduced);
        for (std::size_t n = 0; n < K; ++n)
            rinc.push_back(red[n + 1].project.compose_after(
                seq->increment(n).compose_after(red[n].include)));
        ComplexSequence rseq(rstages, std::move(rinc));

        // the inclusions assemble into a telescope morphism whose step data
        // is homotopy * increment * inclusion; construction validates the
        // defining relations, certifying the transported increments
        std::vector<ChainMap> incl;
        std::vector<ChainHomotopy> steps;
        for (std::size_t n = 0; n <= K; ++n) incl.push_back(red[n].include);
        for (std::size_t n = 0; n < K; ++n)
            steps.push_back(compose(red[n + 1].homotopy,
                                    seq->increment(n).compose_after(red[n].include)));
        [[maybe_unused]] TelescopeMorphism check(rseq, *seq, std::move(incl),
                                                 std::move(steps));

        TelescopeComplex tel = build_telescope(rseq);
        res.telescope_betti = betti_upto(tel.complex(), opt.max_degree);
    }
    res.telescope_agrees = res.telescope_betti == res.stable;
    return res;
}

f2::Matrix cap_action(const CellComplex& space, std::size_t from_degree,
                      const HomologySpace& from, const HomologySpace& to,
                      std::size_t p, const f2::Vector& cochain) {
    f2::Matrix m(to.rank(), from.rank());
    for (std::size_t i = 0; i < from.rank(); ++i) {
        f2::Vector w = cap(space, from_degree, from.representatives()[i], p, cochain);
        f2::Vector coords = to.coordinates(w);
        for (std::size_t r = 0; r < to.rank(); ++r)
            if (coords.get(r)) m.set(r, i, true);
    }
    return m;
}

ModuleActionResult module_action(const CellComplex& x, const Group& g,
                                 const VertexAction& action, std::size_t cocycle_degree,
                                 const EquivariantOptions& opt) {
    std::size_t K = resolve_stages(opt);
    std::size_t p = cocycle_degree;
    if (p == 0)
        throw std::invalid_argument("module action: cocycle degree must be positive");
    if (p > opt.max_degree)
        throw std::invalid_argument("module action: cocycle degree exceeds max degree");

    ModuleActionResult res;
    res.stages = K;
    res.cocycle_degree = p;

    const CellComplex* space = nullptr;
    const CellComplex* base = nullptr;
    const ChainMap* proj = nullptr;
    std::unique_ptr<BorelSequence> bs;
    std::unique_ptr<CellComplex> pt;
    std::unique_ptr<ChainMap> to_pt;
    if (g.order() == 1) {
        validate_action(x, g, action);
        pt = std::make_unique<CellComplex>(CellComplex::point());
        to_pt = std::make_unique<ChainMap>(induced_chain_map(
            x, *pt, std::vector<std::size_t>(x.vertex_count(), 0)));
        space = &x;
        base = pt.get();
        proj = to_pt.get();
    } else {
        bs = std::make_unique<BorelSequence>(borel_sequence(x, g, action, K));
        space = &bs->spaces[K];
        base = &bs->bases[K];
        proj = &bs->projections[K];
    }

    HomologySpace coh = HomologySpace::cohomology(*base->chain(), p);
    res.generators = coh.rank();

    std::vector<HomologySpace> hom;
    for (std::size_t j = 0; j <= opt.max_degree; ++j) {
        hom.push_back(HomologySpace::homology(*space->chain(), j));
        res.homology_rank.push_back(hom.back().rank());
    }

    f2::Matrix pull = proj->component(p).transposed();
    for (std::size_t i = 0; i < coh.rank(); ++i) {
        f2::Vector pulled = pull.apply(coh.representatives()[i]);
        std::vector<f2::Matrix> per_degree;
        for (std::size_t j = p; j <= opt.max_degree; ++j)
            per_degree.push_back(cap_action(*space, j, hom[j], hom[j - p], p, pulled));
        res.matrices.push_back(std::move(per_degree));
    }
    return res;
}

KirwanResult kirwan_comparison(const CellComplex& x, const Group& g,
                               const VertexAction& action, const EquivariantOptions& opt) {
    std::size_t K = resolve_stages(opt);
    KirwanResult res;
    res.stages = K;

    std::shared_ptr<const ChainComplex> stage_chain, orbit_chain;
    std::unique_ptr<ChainMap> comp;
    if (g.order() == 1) {
        validate_action(x, g, action);
        stage_chain = x.chain();
        orbit_chain = x.chain();
        comp = std::make_unique<ChainMap>(ChainMap::identity(x.chain()));
    } else {
        BorelSequence bs = borel_sequence(x, g, action, K);
        Quotient xq = quotient(bs.domain, g, bs.domain_action);
        if (xq.sd_rounds != 0)
            throw std::logic_error("comparison: orbit space unexpectedly subdivided");
        stage_chain = bs.stage_chains.stage_ptr(K);
        orbit_chain = xq.complex.chain();
        comp = std::make_unique<ChainMap>(descend(bs.last_to_domain, bs.last_space, xq));
    }

    res.two_sided = true;
    for (std::size_t j = 0; j <= opt.max_degree; ++j) {
        HomologySpace hs = HomologySpace::homology(*stage_chain, j);
        HomologySpace ho = HomologySpace::homology(*orbit_chain, j);
        res.stage_betti.push_back(hs.rank());
        res.orbit_betti.push_back(ho.rank());
        f2::Matrix m = induced_on_homology(*comp, j, hs, ho);
        auto inv = m.rows() == m.cols() ? f2::inverse(m) : std::nullopt;
        bool iso = inv.has_value();
        res.iso.push_back(iso);
        if (iso) {
            f2::Matrix id = f2::Matrix::identity(m.rows());
            res.two_sided = res.two_sided && (*inv * m == id) && (m * *inv == id);
            res.inverse.push_back(std::move(*inv));
        } else {
            res.two_sided = false;
            res.inverse.push_back(f2::Matrix(0, 0));
        }
        res.comparison.push_back(std::move(m));
    }
    return res;
}

} // namespace telhom
