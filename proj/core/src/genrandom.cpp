#include "telhom/genrandom.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace telhom {

namespace {

// flat variable layout for solving linear systems whose unknowns are the
// entries of a family of matrices
struct Slots {
    struct Slot {
        std::size_t rows = 0, cols = 0, off = 0;
    };
    std::vector<Slot> slots;
    std::size_t total = 0;

    std::size_t add(std::size_t rows, std::size_t cols) {
        slots.push_back({rows, cols, total});
        total += rows * cols;
        return slots.size() - 1;
    }
    std::size_t at(std::size_t s, std::size_t r, std::size_t c) const {
        return slots[s].off + r * slots[s].cols + c;
    }
    f2::Matrix unpack(std::size_t s, const f2::Vector& u) const {
        const Slot& sl = slots[s];
        f2::Matrix m(sl.rows, sl.cols);
        for (std::size_t r = 0; r < sl.rows; ++r)
            for (std::size_t c = 0; c < sl.cols; ++c)
                if (u.get(sl.off + r * sl.cols + c)) m.set(r, c, true);
        return m;
    }
};

f2::Vector sample_solution(Rng& rng, const std::vector<f2::Vector>& rows,
                           std::size_t width) {
    f2::Matrix m(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    f2::Vector u(width);
    for (const f2::Vector& v : f2::kernel_basis(m))
        if (rng.flip()) u.xor_in(v);
    return u;
}

// chain map constraints d^tgt_k f_k + f_{k-1} d^src_k = 0 for one pair of
// complexes, appended as rows over the given slots
void chain_map_rows(const ChainComplex& src, const ChainComplex& tgt,
                    const std::vector<std::size_t>& f, const Slots& sl,
                    std::size_t maxdeg, std::vector<f2::Vector>& rows) {
    for (std::size_t k = 1; k <= maxdeg; ++k) {
        f2::Matrix ds = src.boundary(k);
        f2::Matrix dt = tgt.boundary(k);
        for (std::size_t i = 0; i < tgt.dim(k - 1); ++i)
            for (std::size_t j = 0; j < src.dim(k); ++j) {
                f2::Vector row(sl.total);
                for (std::size_t c = 0; c < src.dim(k - 1); ++c)
                    if (ds.get(c, j)) row.flip(sl.at(f[k - 1], i, c));
                for (std::size_t r = 0; r < tgt.dim(k); ++r)
                    if (dt.get(i, r)) row.flip(sl.at(f[k], r, j));
                if (!row.is_zero()) rows.push_back(std::move(row));
            }
    }
}

std::size_t sequence_top(const ComplexSequence& s) {
    std::size_t t = 0;
    for (std::size_t n = 0; n < s.stage_count(); ++n)
        t = std::max(t, s.stage(n).top_degree());
    return t;
}

} // namespace

f2::Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    f2::Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.flip()) m.set(r, c, true);
    return m;
}

f2::Matrix random_invertible(Rng& rng, std::size_t n, f2::Matrix* inverse_out) {
    struct Op {
        bool swap;
        std::size_t i, j;
    };
    std::vector<Op> ops;
    f2::Matrix m = f2::Matrix::identity(n);
    if (n >= 2) {
        for (std::size_t t = 0; t < 4 * n; ++t) {
            std::size_t i = rng.below(n);
            std::size_t j = rng.below(n - 1);
            if (j >= i) ++j;
            bool sw = rng.below(4) == 0;
            ops.push_back({sw, i, j});
            if (sw)
                m.swap_rows(i, j);
            else
                m.xor_row_into(i, j);
        }
    }
    if (inverse_out) {
        // every elementary operation is an involution, so undoing them in
        // reverse order builds the inverse
        f2::Matrix v = f2::Matrix::identity(n);
        for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
            if (it->swap)
                v.swap_rows(it->i, it->j);
            else
                v.xor_row_into(it->i, it->j);
        }
        *inverse_out = std::move(v);
    }
    return m;
}

RandomComplex random_chain_complex(Rng& rng, std::size_t top_degree, std::size_t max_block) {
    std::size_t top = top_degree;
    std::vector<std::size_t> h(top + 1, 0), p(top + 1, 0);
    std::size_t total = 0;
    for (std::size_t k = 0; k <= top; ++k) total += h[k] = rng.below(max_block + 1);
    for (std::size_t k = 0; k < top; ++k) total += p[k] = rng.below(max_block + 1);
    if (total == 0) h[0] = 1;

    auto killer = [&](std::size_t k) { return k ? p[k - 1] : 0; };
    std::vector<std::size_t> dims(top + 1);
    for (std::size_t k = 0; k <= top; ++k) dims[k] = h[k] + killer(k) + p[k];

    // standard form: the killer block of degree k+1 maps identically onto the
    // victim block of degree k, everything else dies
    std::vector<f2::Matrix> bnd;
    for (std::size_t k = 0; k < top; ++k) {
        f2::Matrix d(dims[k], dims[k + 1]);
        for (std::size_t i = 0; i < p[k]; ++i)
            d.set(h[k] + killer(k) + i, h[k + 1] + i, true);
        bnd.push_back(std::move(d));
    }

    std::vector<f2::Matrix> u(top + 1), v(top + 1);
    for (std::size_t k = 0; k <= top; ++k) u[k] = random_invertible(rng, dims[k], &v[k]);
    for (std::size_t k = 0; k < top; ++k) bnd[k] = u[k] * bnd[k] * v[k + 1];

    RandomComplex out;
    out.complex = std::make_shared<ChainComplex>(std::move(dims), std::move(bnd));
    out.betti = std::move(h);
    return out;
}

ChainMap random_chain_map(Rng& rng, std::shared_ptr<const ChainComplex> src,
                          std::shared_ptr<const ChainComplex> tgt) {
    std::size_t top = std::max(src->top_degree(), tgt->top_degree());
    Slots sl;
    std::vector<std::size_t> f;
    for (std::size_t k = 0; k <= top; ++k) f.push_back(sl.add(tgt->dim(k), src->dim(k)));

    std::vector<f2::Vector> rows;
    chain_map_rows(*src, *tgt, f, sl, top, rows);
    f2::Vector u = sample_solution(rng, rows, sl.total);

    std::vector<f2::Matrix> comps;
    for (std::size_t k = 0; k <= top; ++k) comps.push_back(sl.unpack(f[k], u));
    return ChainMap(std::move(src), std::move(tgt), std::move(comps));
}

ComplexSequence random_sequence(Rng& rng, std::size_t stages, std::size_t top_degree,
                                std::size_t max_block) {
    if (stages == 0) throw std::invalid_argument("random sequence: no stages");
    std::vector<std::shared_ptr<const ChainComplex>> cs;
    for (std::size_t n = 0; n < stages; ++n)
        cs.push_back(random_chain_complex(rng, top_degree, max_block).complex);
    std::vector<ChainMap> inc;
    for (std::size_t n = 0; n + 1 < stages; ++n)
        inc.push_back(random_chain_map(rng, cs[n], cs[n + 1]));
    return ComplexSequence(std::move(cs), std::move(inc));
}

TelescopeMorphism random_telescope_morphism(Rng& rng, const ComplexSequence& src,
                                            const ComplexSequence& tgt) {
    std::size_t s = src.stage_count();
    if (tgt.stage_count() != s)
        throw std::invalid_argument("random telescope morphism: stage count mismatch");
    std::size_t top = std::max(sequence_top(src), sequence_top(tgt));

    Slots sl;
    std::vector<std::vector<std::size_t>> phi(s), kap(s - 1);
    for (std::size_t n = 0; n < s; ++n)
        for (std::size_t k = 0; k <= top; ++k)
            phi[n].push_back(sl.add(tgt.stage(n).dim(k), src.stage(n).dim(k)));
    for (std::size_t n = 0; n + 1 < s; ++n)
        for (std::size_t k = 0; k <= top; ++k)
            kap[n].push_back(sl.add(tgt.stage(n + 1).dim(k + 1), src.stage(n).dim(k)));

    std::vector<f2::Vector> rows;
    for (std::size_t n = 0; n < s; ++n)
        chain_map_rows(src.stage(n), tgt.stage(n), phi[n], sl, top, rows);

    // step relation phi_{n+1} a_n + b_n phi_n = d kappa_n + kappa_n d
    for (std::size_t n = 0; n + 1 < s; ++n) {
        const ChainComplex& cs = src.stage(n);
        const ChainComplex& cs1 = src.stage(n + 1);
        const ChainComplex& ct = tgt.stage(n);
        const ChainComplex& ct1 = tgt.stage(n + 1);
        for (std::size_t k = 0; k <= top; ++k) {
            f2::Matrix a = src.increment(n).component(k);
            f2::Matrix b = tgt.increment(n).component(k);
            f2::Matrix dt1 = ct1.boundary(k + 1);
            f2::Matrix dsk = cs.boundary(k);
            for (std::size_t i = 0; i < ct1.dim(k); ++i)
                for (std::size_t j = 0; j < cs.dim(k); ++j) {
                    f2::Vector row(sl.total);
                    for (std::size_t c = 0; c < cs1.dim(k); ++c)
                        if (a.get(c, j)) row.flip(sl.at(phi[n + 1][k], i, c));
                    for (std::size_t c = 0; c < ct.dim(k); ++c)
                        if (b.get(i, c)) row.flip(sl.at(phi[n][k], c, j));
                    for (std::size_t r = 0; r < ct1.dim(k + 1); ++r)
                        if (dt1.get(i, r)) row.flip(sl.at(kap[n][k], r, j));
                    if (k)
                        for (std::size_t c = 0; c < cs.dim(k - 1); ++c)
                            if (dsk.get(c, j)) row.flip(sl.at(kap[n][k - 1], i, c));
                    if (!row.is_zero()) rows.push_back(std::move(row));
                }
        }
    }

    f2::Vector u = sample_solution(rng, rows, sl.total);

    std::vector<ChainMap> stage_maps;
    for (std::size_t n = 0; n < s; ++n) {
        std::vector<f2::Matrix> comps;
        for (std::size_t k = 0; k <= top; ++k) comps.push_back(sl.unpack(phi[n][k], u));
        stage_maps.emplace_back(src.stage_ptr(n), tgt.stage_ptr(n), std::move(comps));
    }
    std::vector<ChainHomotopy> steps;
    for (std::size_t n = 0; n + 1 < s; ++n) {
        std::vector<f2::Matrix> comps;
        for (std::size_t k = 0; k <= top; ++k) comps.push_back(sl.unpack(kap[n][k], u));
        steps.emplace_back(src.stage_ptr(n), tgt.stage_ptr(n + 1), std::move(comps));
    }
    return TelescopeMorphism(src, tgt, std::move(stage_maps), std::move(steps));
}

HomotopicPair random_homotopic_pair(Rng& rng, const ComplexSequence& src,
                                    const ComplexSequence& tgt) {
    TelescopeMorphism first = random_telescope_morphism(rng, src, tgt);
    std::size_t s = src.stage_count();
    std::size_t top = std::max(sequence_top(src), sequence_top(tgt));

    std::vector<ChainHomotopy> psi;
    for (std::size_t n = 0; n < s; ++n) {
        std::vector<f2::Matrix> comps;
        for (std::size_t k = 0; k <= top; ++k)
            comps.push_back(random_matrix(rng, tgt.stage(n).dim(k + 1), src.stage(n).dim(k)));
        psi.emplace_back(src.stage_ptr(n), tgt.stage_ptr(n), std::move(comps));
    }
    std::vector<std::vector<f2::Matrix>> mu(s - 1);
    for (std::size_t n = 0; n + 1 < s; ++n)
        for (std::size_t k = 0; k <= top; ++k)
            mu[n].push_back(random_matrix(rng, tgt.stage(n + 1).dim(k + 2), src.stage(n).dim(k)));

    // perturb by the boundary of (psi, mu); the constructors re-verify that
    // the perturbed datum still satisfies every relation
    std::vector<ChainMap> phi1;
    for (std::size_t n = 0; n < s; ++n) {
        std::vector<f2::Matrix> comps;
        for (std::size_t k = 0; k <= top; ++k) {
            f2::Matrix m = first.stage_map(n).component(k) +
                           tgt.stage(n).boundary(k + 1) * psi[n].component(k);
            if (k) m = m + psi[n].component(k - 1) * src.stage(n).boundary(k);
            comps.push_back(std::move(m));
        }
        phi1.emplace_back(src.stage_ptr(n), tgt.stage_ptr(n), std::move(comps));
    }
    std::vector<ChainHomotopy> kap1;
    for (std::size_t n = 0; n + 1 < s; ++n) {
        std::vector<f2::Matrix> comps;
        for (std::size_t k = 0; k <= top; ++k) {
            f2::Matrix m = first.step_homotopy(n).component(k) +
                           psi[n + 1].component(k) * src.increment(n).component(k) +
                           tgt.increment(n).component(k + 1) * psi[n].component(k) +
                           tgt.stage(n + 1).boundary(k + 2) * mu[n][k];
            if (k) m = m + mu[n][k - 1] * src.stage(n).boundary(k);
            comps.push_back(std::move(m));
        }
        kap1.emplace_back(src.stage_ptr(n), tgt.stage_ptr(n + 1), std::move(comps));
    }

    TelescopeMorphism second(src, tgt, std::move(phi1), std::move(kap1));
    TelescopeHomotopyDatum datum(first, second, psi, mu);
    return HomotopicPair{std::move(first), std::move(second), std::move(datum)};
}

} // namespace telhom
