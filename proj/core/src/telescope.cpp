#include "telhom/telescope.hpp"

#include <stdexcept>

namespace telhom {

ComplexSequence::ComplexSequence(std::vector<std::shared_ptr<const ChainComplex>> stages,
                                 std::vector<ChainMap> increments)
    : stages_(std::move(stages)), increments_(std::move(increments)) {
    if (stages_.empty())
        throw std::invalid_argument("sequence: needs at least one stage");
    for (auto& s : stages_)
        if (!s) throw std::invalid_argument("sequence: null stage");
    if (increments_.size() + 1 != stages_.size())
        throw std::invalid_argument("sequence: needs exactly one increment per step");
    for (std::size_t n = 0; n < increments_.size(); ++n) {
        if (!(increments_[n].source() == *stages_[n]) ||
            !(increments_[n].target() == *stages_[n + 1]))
            throw std::invalid_argument("sequence: increment endpoints mismatch at step " +
                                        std::to_string(n));
    }
}

ChainMap ComplexSequence::transition(std::size_t from, std::size_t to) const {
    if (from > to || to >= stages_.size())
        throw std::invalid_argument("sequence: bad transition range");
    ChainMap acc = ChainMap::identity(stages_[from]);
    for (std::size_t n = from; n < to; ++n)
        acc = increments_[n].compose_after(acc);
    return acc;
}

ComplexSequence ComplexSequence::prefix(std::size_t n_stages) const {
    if (n_stages == 0 || n_stages > stages_.size())
        throw std::invalid_argument("sequence: bad prefix length");
    std::vector<std::shared_ptr<const ChainComplex>> s(stages_.begin(),
                                                       stages_.begin() + n_stages);
    std::vector<ChainMap> inc(increments_.begin(), increments_.begin() + (n_stages - 1));
    return ComplexSequence(std::move(s), std::move(inc));
}

TelescopeComplex::TelescopeComplex(ComplexSequence seq) : seq_(std::move(seq)) {
    std::size_t S = seq_.stage_count();
    std::size_t last = S - 1;
    std::size_t top = 0;
    for (std::size_t n = 0; n < S; ++n) {
        top = std::max(top, seq_.stage(n).top_degree());
        if (n < last) top = std::max(top, seq_.stage(n).top_degree() + 1);
    }

    entries_.resize(top + 1);
    base_off_.assign(top + 1, std::vector<std::size_t>(S, 0));
    cyl_off_.assign(top + 1, std::vector<std::size_t>(S, 0));
    std::vector<std::size_t> dims(top + 1, 0);
    for (std::size_t t = 0; t <= top; ++t) {
        std::size_t acc = 0;
        for (std::size_t n = 0; n < S; ++n) {
            base_off_[t][n] = acc;
            for (std::size_t i = 0; i < seq_.stage(n).dim(t); ++i)
                entries_[t].push_back({n, false, i});
            acc += seq_.stage(n).dim(t);
            cyl_off_[t][n] = acc;
            if (n < last && t >= 1) {
                for (std::size_t i = 0; i < seq_.stage(n).dim(t - 1); ++i)
                    entries_[t].push_back({n, true, i});
                acc += seq_.stage(n).dim(t - 1);
            }
        }
        dims[t] = acc;
    }

    std::vector<f2::Matrix> bnd;
    for (std::size_t t = 1; t <= top; ++t) {
        f2::Matrix m(dims[t - 1], dims[t]);
        for (std::size_t n = 0; n < S; ++n) {
            const ChainComplex& C = seq_.stage(n);
            // base columns: stage-local boundary
            f2::Matrix d = C.boundary(t);
            for (std::size_t i = 0; i < C.dim(t); ++i)
                for (std::size_t r = 0; r < d.rows(); ++r)
                    if (d.get(r, i)) m.flip(base_off_[t - 1][n] + r, base_off_[t][n] + i);
            // cylinder columns: local boundary on the cylinder copy, the
            // increment into stage n+1, and the base copy at stage n
            if (n < last && t >= 1 && C.dim(t - 1) > 0) {
                f2::Matrix dc = C.boundary(t - 1);
                f2::Matrix a = seq_.increment(n).component(t - 1);
                for (std::size_t i = 0; i < C.dim(t - 1); ++i) {
                    std::size_t col = cyl_off_[t][n] + i;
                    if (t >= 2)
                        for (std::size_t r = 0; r < dc.rows(); ++r)
                            if (dc.get(r, i)) m.flip(cyl_off_[t - 1][n] + r, col);
                    for (std::size_t r = 0; r < a.rows(); ++r)
                        if (a.get(r, i)) m.flip(base_off_[t - 1][n + 1] + r, col);
                    m.flip(base_off_[t - 1][n] + i, col);
                }
            }
        }
        bnd.push_back(std::move(m));
    }
    cx_ = std::make_shared<const ChainComplex>(std::move(dims), std::move(bnd));
}

std::size_t TelescopeComplex::index(std::size_t degree, std::size_t stage, bool cylinder,
                                    std::size_t local) const {
    return (cylinder ? cyl_off_[degree][stage] : base_off_[degree][stage]) + local;
}

const std::vector<TelescopeComplex::Entry>& TelescopeComplex::entries(std::size_t degree) const {
    static const std::vector<Entry> empty;
    if (degree >= entries_.size()) return empty;
    return entries_[degree];
}

TelescopeComplex build_telescope(ComplexSequence seq) {
    return TelescopeComplex(std::move(seq));
}

namespace {

void require_same_shape(const ComplexSequence& a, const ComplexSequence& b) {
    if (a.stage_count() != b.stage_count())
        throw std::invalid_argument("telescope: stage counts differ");
}

} // namespace

TelescopeMorphism::TelescopeMorphism(ComplexSequence source, ComplexSequence target,
                                     std::vector<ChainMap> stage_maps,
                                     std::vector<ChainHomotopy> step_homotopies)
    : src_(std::move(source)), tgt_(std::move(target)),
      stage_maps_(std::move(stage_maps)), steps_(std::move(step_homotopies)) {
    require_same_shape(src_, tgt_);
    std::size_t S = src_.stage_count();
    if (stage_maps_.size() != S)
        throw std::invalid_argument("telescope morphism: one stage map per stage required");
    if (steps_.size() + 1 != S)
        throw std::invalid_argument("telescope morphism: one step homotopy per step required");
    for (std::size_t n = 0; n < S; ++n) {
        if (!(stage_maps_[n].source() == src_.stage(n)) ||
            !(stage_maps_[n].target() == tgt_.stage(n)))
            throw std::invalid_argument("telescope morphism: stage map endpoints mismatch");
    }
    for (std::size_t n = 0; n + 1 < S; ++n) {
        if (!(steps_[n].source() == src_.stage(n)) ||
            !(steps_[n].target() == tgt_.stage(n + 1)))
            throw std::invalid_argument("telescope morphism: step homotopy endpoints mismatch");
        // defining relation: phi_{N+1} a_N - b_N phi_N = d k_N + k_N d
        ChainMap lhs = stage_maps_[n + 1].compose_after(src_.increment(n));
        ChainMap rhs = tgt_.increment(n).compose_after(stage_maps_[n]);
        if (!validate_homotopy(steps_[n], lhs, rhs))
            throw std::invalid_argument("telescope morphism: step relation fails at step " +
                                        std::to_string(n));
    }
}

TelescopeMorphism TelescopeMorphism::identity(const ComplexSequence& seq) {
    std::vector<ChainMap> maps;
    std::vector<ChainHomotopy> steps;
    for (std::size_t n = 0; n < seq.stage_count(); ++n)
        maps.push_back(ChainMap::identity(seq.stage_ptr(n)));
    for (std::size_t n = 0; n + 1 < seq.stage_count(); ++n)
        steps.push_back(ChainHomotopy::zero(seq.stage_ptr(n), seq.stage_ptr(n + 1)));
    return TelescopeMorphism(seq, seq, std::move(maps), std::move(steps));
}

TelescopeMorphism TelescopeMorphism::zero(const ComplexSequence& source,
                                          const ComplexSequence& target) {
    std::vector<ChainMap> maps;
    std::vector<ChainHomotopy> steps;
    for (std::size_t n = 0; n < source.stage_count(); ++n)
        maps.push_back(ChainMap::zero(source.stage_ptr(n), target.stage_ptr(n)));
    for (std::size_t n = 0; n + 1 < source.stage_count(); ++n)
        steps.push_back(ChainHomotopy::zero(source.stage_ptr(n), target.stage_ptr(n + 1)));
    return TelescopeMorphism(source, target, std::move(maps), std::move(steps));
}

TelescopeMorphism TelescopeMorphism::compose_after(const TelescopeMorphism& first) const {
    require_same_shape(first.src_, src_);
    std::size_t S = src_.stage_count();
    std::vector<ChainMap> maps;
    std::vector<ChainHomotopy> steps;
    for (std::size_t n = 0; n < S; ++n)
        maps.push_back(stage_maps_[n].compose_after(first.stage_maps_[n]));
    for (std::size_t n = 0; n + 1 < S; ++n) {
        // (chi, lambda) . (phi, kappa) has step maps chi_{N+1} kappa_N + lambda_N phi_N
        ChainHomotopy left = compose(stage_maps_[n + 1], first.steps_[n]);
        ChainHomotopy right = compose(steps_[n], first.stage_maps_[n]);
        steps.push_back(add(left, right));
    }
    return TelescopeMorphism(first.src_, tgt_, std::move(maps), std::move(steps));
}

ChainMap telescope_map(const TelescopeMorphism& m,
                       const TelescopeComplex& src_tel, const TelescopeComplex& tgt_tel) {
    const ChainComplex& SC = src_tel.complex();
    const ChainComplex& TC = tgt_tel.complex();
    std::size_t top = SC.top_degree();
    std::vector<f2::Matrix> comps;
    for (std::size_t t = 0; t <= top; ++t) {
        f2::Matrix mat(TC.dim(t), SC.dim(t));
        const auto& ents = src_tel.entries(t);
        for (std::size_t col = 0; col < ents.size(); ++col) {
            const auto& e = ents[col];
            if (!e.cylinder) {
                f2::Matrix phi = m.stage_map(e.stage).component(t);
                for (std::size_t r = 0; r < phi.rows(); ++r)
                    if (phi.get(r, e.local))
                        mat.flip(tgt_tel.index(t, e.stage, false, r), col);
            } else {
                // base part in stage N+1 through the step homotopy
                f2::Matrix kap = m.step_homotopy(e.stage).component(t - 1);
                for (std::size_t r = 0; r < kap.rows(); ++r)
                    if (kap.get(r, e.local))
                        mat.flip(tgt_tel.index(t, e.stage + 1, false, r), col);
                // cylinder part through the stage map one degree down
                f2::Matrix phi = m.stage_map(e.stage).component(t - 1);
                for (std::size_t r = 0; r < phi.rows(); ++r)
                    if (phi.get(r, e.local))
                        mat.flip(tgt_tel.index(t, e.stage, true, r), col);
            }
        }
        comps.push_back(std::move(mat));
    }
    return ChainMap(src_tel.complex_ptr(), tgt_tel.complex_ptr(), std::move(comps));
}

TelescopeHomotopyDatum::TelescopeHomotopyDatum(TelescopeMorphism first, TelescopeMorphism second,
                                               std::vector<ChainHomotopy> stage_homotopies,
                                               std::vector<std::vector<f2::Matrix>> step_homotopies)
    : first_(std::move(first)), second_(std::move(second)),
      stage_h_(std::move(stage_homotopies)), step_h_(std::move(step_homotopies)) {
    const ComplexSequence& C = first_.source();
    const ComplexSequence& D = first_.target();
    require_same_shape(C, second_.source());
    require_same_shape(D, second_.target());
    std::size_t S = C.stage_count();
    if (stage_h_.size() != S || step_h_.size() + 1 != S)
        throw std::invalid_argument("telescope homotopy: component counts mismatch");
    for (std::size_t n = 0; n < S; ++n) {
        if (!(stage_h_[n].source() == C.stage(n)) || !(stage_h_[n].target() == D.stage(n)))
            throw std::invalid_argument("telescope homotopy: stage homotopy endpoints mismatch");
        if (!validate_homotopy(stage_h_[n], first_.stage_map(n), second_.stage_map(n)))
            throw std::invalid_argument(
                "telescope homotopy: stage relation fails at stage " + std::to_string(n));
    }
    for (std::size_t n = 0; n + 1 < S; ++n) {
        const ChainComplex& Cn = C.stage(n);
        const ChainComplex& Dn1 = D.stage(n + 1);
        auto& comps = step_h_[n];
        std::size_t need = Cn.top_degree() + 1;
        if (comps.size() < need) comps.resize(need);
        for (std::size_t k = 0; k < comps.size(); ++k) {
            std::size_t r = Dn1.dim(k + 2), c = Cn.dim(k);
            if (comps[k].rows() == 0 && comps[k].cols() == 0) comps[k] = f2::Matrix(r, c);
            if (comps[k].rows() != r || comps[k].cols() != c)
                throw std::invalid_argument("telescope homotopy: step component shape mismatch");
        }
        auto comp = [&](std::size_t k) {
            if (k < comps.size()) return comps[k];
            return f2::Matrix(Dn1.dim(k + 2), Cn.dim(k));
        };
        // step relation:
        //   k'_N - k_N + psi_{N+1} a_N + b_N psi_N = d m_N + m_N d
        // with psi the stage homotopies and m_N the degree +2 step data
        for (std::size_t k = 0; k <= Cn.top_degree() + 1; ++k) {
            f2::Matrix lhs = first_.step_homotopy(n).component(k) +
                             second_.step_homotopy(n).component(k);
            lhs = lhs + stage_h_[n + 1].component(k) * C.increment(n).component(k);
            lhs = lhs + D.increment(n).component(k + 1) * stage_h_[n].component(k);
            f2::Matrix rhs = Dn1.boundary(k + 2) * comp(k);
            if (k >= 1) rhs = rhs + comp(k - 1) * Cn.boundary(k);
            if (lhs != rhs)
                throw std::invalid_argument(
                    "telescope homotopy: step relation fails at step " + std::to_string(n));
        }
    }
}

ChainHomotopy telescope_homotopy(const TelescopeHomotopyDatum& datum,
                                 const TelescopeComplex& src_tel,
                                 const TelescopeComplex& tgt_tel) {
    const ChainComplex& SC = src_tel.complex();
    const ChainComplex& TC = tgt_tel.complex();
    std::size_t top = SC.top_degree();
    std::vector<f2::Matrix> comps;
    for (std::size_t t = 0; t <= top; ++t) {
        f2::Matrix mat(TC.dim(t + 1), SC.dim(t));
        const auto& ents = src_tel.entries(t);
        for (std::size_t col = 0; col < ents.size(); ++col) {
            const auto& e = ents[col];
            if (!e.cylinder) {
                f2::Matrix psi = datum.stage_homotopy(e.stage).component(t);
                for (std::size_t r = 0; r < psi.rows(); ++r)
                    if (psi.get(r, e.local))
                        mat.flip(tgt_tel.index(t + 1, e.stage, false, r), col);
            } else {
                const auto& steps = datum.step_homotopy(e.stage);
                if (t >= 1 && t - 1 < steps.size()) {
                    const f2::Matrix& mu = steps[t - 1];
                    for (std::size_t r = 0; r < mu.rows(); ++r)
                        if (mu.get(r, e.local))
                            mat.flip(tgt_tel.index(t + 1, e.stage + 1, false, r), col);
                }
                f2::Matrix psi = datum.stage_homotopy(e.stage).component(t - 1);
                for (std::size_t r = 0; r < psi.rows(); ++r)
                    if (psi.get(r, e.local))
                        mat.flip(tgt_tel.index(t + 1, e.stage, true, r), col);
            }
        }
        comps.push_back(std::move(mat));
    }
    return ChainHomotopy(src_tel.complex_ptr(), tgt_tel.complex_ptr(), std::move(comps));
}

TelescopeProduct telescope_product(const TelescopeComplex& tc, const TelescopeComplex& td) {
    if (tc.stage_count() != td.stage_count())
        throw std::invalid_argument("telescope product: stage counts differ");
    const ComplexSequence& C = tc.sequence();
    const ComplexSequence& D = td.sequence();
    std::size_t S = C.stage_count();

    // stagewise tensor sequence
    std::vector<std::shared_ptr<const ChainComplex>> stages;
    for (std::size_t n = 0; n < S; ++n)
        stages.push_back(std::make_shared<const ChainComplex>(
            tensor_product(C.stage(n), D.stage(n))));
    std::vector<ChainMap> incs;
    for (std::size_t n = 0; n + 1 < S; ++n)
        incs.push_back(tensor_map(C.increment(n), D.increment(n), stages[n], stages[n + 1]));
    TelescopeComplex tgt(ComplexSequence(stages, std::move(incs)));

    auto source = std::make_shared<const ChainComplex>(
        tensor_product(tc.complex(), td.complex()));

    // transitions a^{n-m} and b^{m-n}, cached on demand
    std::vector<std::vector<ChainMap>> ca, db;
    ca.assign(S, {});
    db.assign(S, {});
    auto trans_c = [&](std::size_t from, std::size_t to) -> const ChainMap& {
        auto& row = ca[from];
        while (row.size() <= to - from) row.push_back(C.transition(from, from + row.size()));
        return row[to - from];
    };
    auto trans_d = [&](std::size_t from, std::size_t to) -> const ChainMap& {
        auto& row = db[from];
        while (row.size() <= to - from) row.push_back(D.transition(from, from + row.size()));
        return row[to - from];
    };

    const ChainComplex& TCC = tc.complex();
    const ChainComplex& TDC = td.complex();
    std::size_t top = source->top_degree();
    std::vector<f2::Matrix> comps;
    for (std::size_t t = 0; t <= top; ++t) {
        f2::Matrix mat(tgt.complex().dim(t), source->dim(t));
        for (std::size_t p = 0; p <= t; ++p) {
            std::size_t q = t - p;
            const auto& ec = tc.entries(p);
            const auto& ed = td.entries(q);
            if (ec.empty() || ed.empty()) continue;
            for (std::size_t i = 0; i < ec.size(); ++i) {
                for (std::size_t j = 0; j < ed.size(); ++j) {
                    std::size_t col = tensor_index(TCC, TDC, p, i, q, j);
                    const auto& u = ec[i];
                    const auto& v = ed[j];
                    std::size_t m = u.stage, n = v.stage;
                    std::size_t pl = p - (u.cylinder ? 1 : 0);   // local degrees
                    std::size_t ql = q - (v.cylinder ? 1 : 0);
                    if (m == n) {
                        if (u.cylinder && v.cylinder) continue;
                        bool cyl = u.cylinder || v.cylinder;
                        const ChainComplex& Cm = C.stage(m);
                        const ChainComplex& Dm = D.stage(m);
                        std::size_t loc = tensor_index(Cm, Dm, pl, u.local, ql, v.local);
                        mat.flip(tgt.index(t, m, cyl, loc), col);
                    } else if (m < n) {
                        if (u.cylinder) continue;
                        const ChainComplex& Cn = C.stage(n);
                        const ChainComplex& Dn = D.stage(n);
                        f2::Matrix a = trans_c(m, n).component(pl);
                        for (std::size_t r = 0; r < a.rows(); ++r) {
                            if (!a.get(r, u.local)) continue;
                            std::size_t loc = tensor_index(Cn, Dn, pl, r, ql, v.local);
                            mat.flip(tgt.index(t, n, v.cylinder, loc), col);
                        }
                    } else {
                        if (v.cylinder) continue;
                        const ChainComplex& Cm = C.stage(m);
                        const ChainComplex& Dm = D.stage(m);
                        f2::Matrix b = trans_d(n, m).component(ql);
                        for (std::size_t r = 0; r < b.rows(); ++r) {
                            if (!b.get(r, v.local)) continue;
                            std::size_t loc = tensor_index(Cm, Dm, pl, u.local, ql, r);
                            mat.flip(tgt.index(t, m, u.cylinder, loc), col);
                        }
                    }
                }
            }
        }
        comps.push_back(std::move(mat));
    }
    ChainMap map(source, tgt.complex_ptr(), std::move(comps));
    return TelescopeProduct{std::move(source), std::move(tgt), std::move(map)};
}

bool shift_is_quasi_iso(const TelescopeComplex& tel) {
    std::size_t S = tel.stage_count();
    if (S < 2)
        throw std::invalid_argument("shift: needs at least two stages");
    TelescopeComplex prev(tel.sequence().prefix(S - 1));
    const ComplexSequence& seq = tel.sequence();

    const ChainComplex& PC = prev.complex();
    std::size_t top = PC.top_degree();
    std::vector<f2::Matrix> comps;
    for (std::size_t t = 0; t <= top; ++t) {
        f2::Matrix mat(tel.complex().dim(t), PC.dim(t));
        const auto& ents = prev.entries(t);
        for (std::size_t col = 0; col < ents.size(); ++col) {
            const auto& e = ents[col];
            std::size_t loc_deg = t - (e.cylinder ? 1 : 0);
            f2::Matrix a = seq.increment(e.stage).component(loc_deg);
            for (std::size_t r = 0; r < a.rows(); ++r)
                if (a.get(r, e.local))
                    mat.flip(tel.index(t, e.stage + 1, e.cylinder, r), col);
        }
        comps.push_back(std::move(mat));
    }
    ChainMap shift(prev.complex_ptr(), tel.complex_ptr(), std::move(comps));

    ChainComplex cn = cone(shift);
    for (std::size_t k = 0; k + 1 < S; ++k)
        if (betti(cn, k) != 0) return false;
    return true;
}

} // namespace telhom
