#include "telhom/morse.hpp"

#include <stdexcept>

namespace telhom {

std::size_t MorseMatching::pair_count() const {
    std::size_t n = 0;
    for (auto& p : pairs) n += p.size();
    return n;
}

MorseMatching greedy_matching(const ChainComplex& c) {
    std::size_t top = c.top_degree();
    std::vector<std::vector<bool>> matched(top + 1);
    for (std::size_t k = 0; k <= top; ++k) matched[k].assign(c.dim(k), false);

    MorseMatching m;
    if (top == 0) return m;
    m.pairs.resize(top);
    for (std::size_t k = 0; k < top; ++k) {
        f2::Matrix d = c.boundary(k + 1);
        std::vector<std::size_t> match_of_a(c.dim(k), c.dim(k + 1));
        auto& pk = m.pairs[k];
        for (std::size_t b = 0; b < c.dim(k + 1); ++b) {
            if (matched[k + 1][b]) continue;
            for (std::size_t a = 0; a < c.dim(k); ++a) {
                if (matched[k][a] || !d.get(a, b)) continue;
                // adding (a, b) must not close a cycle in the pair digraph
                // with edges (x, y) -> (x', y') iff <d y, x'> = 1
                match_of_a[a] = b;
                bool cyclic = false;
                std::vector<std::size_t> stack = {a};
                std::vector<bool> seen(c.dim(k), false);
                seen[a] = true;
                while (!stack.empty() && !cyclic) {
                    std::size_t x = stack.back();
                    stack.pop_back();
                    std::size_t y = match_of_a[x];
                    for (std::size_t r = 0; r < c.dim(k); ++r) {
                        if (r == x || !d.get(r, y)) continue;
                        if (match_of_a[r] == c.dim(k + 1)) continue;
                        if (r == a) { cyclic = true; break; }
                        if (!seen[r]) { seen[r] = true; stack.push_back(r); }
                    }
                }
                if (cyclic) {
                    match_of_a[a] = c.dim(k + 1);
                    continue;
                }
                matched[k][a] = true;
                matched[k + 1][b] = true;
                pk.push_back({a, b});
                break;
            }
        }
    }
    return m;
}

Reduction reduce(const ChainComplex& c, const MorseMatching& m) {
    std::size_t top = c.top_degree();
    if (m.pairs.size() > (top == 0 ? 0 : top))
        throw std::invalid_argument("reduce: matching has pairs beyond the top degree");

    std::vector<std::vector<bool>> alive(top + 1);
    for (std::size_t k = 0; k <= top; ++k) alive[k].assign(c.dim(k), true);
    for (std::size_t k = 0; k < m.pairs.size(); ++k) {
        std::vector<bool> used_a(c.dim(k), false), used_b(c.dim(k + 1), false);
        f2::Matrix dk = c.boundary(k + 1);
        for (auto [a, b] : m.pairs[k]) {
            if (a >= c.dim(k) || b >= c.dim(k + 1))
                throw std::invalid_argument("reduce: pair index out of range");
            if (used_a[a] || used_b[b])
                throw std::invalid_argument("reduce: element matched twice");
            if (!dk.get(a, b))
                throw std::invalid_argument("reduce: matched pair has even coefficient");
            used_a[a] = used_b[b] = true;
        }
    }

    std::vector<f2::Matrix> d;                       // d[k] : C_{k+1} -> C_k, mutable copy
    for (std::size_t k = 0; k + 1 <= top; ++k) d.push_back(c.boundary(k + 1));

    // accumulated maps in original coordinates; it[k] is the transpose of the
    // inclusion so both directions update by row operations
    std::vector<f2::Matrix> it, p, h;
    for (std::size_t k = 0; k <= top; ++k) {
        it.push_back(f2::Matrix::identity(c.dim(k)));
        p.push_back(f2::Matrix::identity(c.dim(k)));
        h.push_back(f2::Matrix(c.dim(k + 1), c.dim(k)));
    }

    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> todo = m.pairs;
    std::size_t remaining = m.pair_count();
    while (remaining > 0) {
        // first pair, by degree then insertion order, whose current
        // coefficient is odd
        bool progressed = false;
        for (std::size_t k = 0; k < todo.size() && !progressed; ++k) {
            for (std::size_t idx = 0; idx < todo[k].size(); ++idx) {
                auto [a, b] = todo[k][idx];
                if (!d[k].get(a, b)) continue;
                todo[k].erase(todo[k].begin() + static_cast<std::ptrdiff_t>(idx));
                --remaining;
                progressed = true;

                // homotopy gains include(b) outer project(a), using the maps
                // accumulated so far
                for (std::size_t r = 0; r < c.dim(k + 1); ++r)
                    if (it[k + 1].get(b, r)) h[k].xor_vec_into_row(p[k].row(a), r);
                // include: columns hitting a through b pick up b's column
                for (std::size_t y = 0; y < c.dim(k + 1); ++y)
                    if (y != b && alive[k + 1][y] && d[k].get(a, y))
                        it[k + 1].xor_row_into(b, y);
                // project: rows feeding b through a pick up a's row
                for (std::size_t x = 0; x < c.dim(k); ++x)
                    if (x != a && alive[k][x] && d[k].get(x, b))
                        p[k].xor_row_into(a, x);
                // boundary: rank one update d += (col b) (row a)
                f2::Vector colb = d[k].column(b);
                for (std::size_t x = 0; x < c.dim(k); ++x)
                    if (x != a && alive[k][x] && colb.get(x))
                        d[k].xor_row_into(a, x);
                alive[k][a] = false;
                alive[k + 1][b] = false;
                break;
            }
        }
        if (!progressed)
            throw std::invalid_argument("reduce: matching is cyclic, no pair has an odd "
                                        "coefficient left");
    }

    std::vector<std::vector<std::size_t>> keep(top + 1);
    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k <= top; ++k) {
        for (std::size_t i = 0; i < c.dim(k); ++i)
            if (alive[k][i]) keep[k].push_back(i);
        dims.push_back(keep[k].size());
    }
    std::vector<f2::Matrix> rb;
    for (std::size_t k = 0; k + 1 <= top; ++k) {
        f2::Matrix mred(dims[k], dims[k + 1]);
        for (std::size_t j = 0; j < dims[k + 1]; ++j)
            for (std::size_t i = 0; i < dims[k]; ++i)
                if (d[k].get(keep[k][i], keep[k + 1][j])) mred.set(i, j, true);
        rb.push_back(std::move(mred));
    }

    auto original = std::make_shared<const ChainComplex>(c.dims(), [&] {
        std::vector<f2::Matrix> bs;
        for (std::size_t k = 0; k + 1 <= top; ++k) bs.push_back(c.boundary(k + 1));
        return bs;
    }());
    auto reduced = std::make_shared<const ChainComplex>(std::move(dims), std::move(rb));

    std::vector<f2::Matrix> inc, prj, hom;
    for (std::size_t k = 0; k <= top; ++k) {
        f2::Matrix mi(c.dim(k), reduced->dim(k));
        for (std::size_t j = 0; j < reduced->dim(k); ++j)
            for (std::size_t r = 0; r < c.dim(k); ++r)
                if (it[k].get(keep[k][j], r)) mi.set(r, j, true);
        inc.push_back(std::move(mi));
        f2::Matrix mp(reduced->dim(k), c.dim(k));
        for (std::size_t j = 0; j < reduced->dim(k); ++j)
            mp.set_row(j, p[k].row(keep[k][j]));
        prj.push_back(std::move(mp));
        hom.push_back(h[k]);
    }

    Reduction r{original, reduced,
                ChainMap(reduced, original, std::move(inc)),
                ChainMap(original, reduced, std::move(prj)),
                ChainHomotopy(original, original, std::move(hom))};

    if (!(r.project.compose_after(r.include) == ChainMap::identity(reduced)))
        throw std::logic_error("reduce: projection does not retract the inclusion");
    if (!validate_homotopy(r.homotopy, ChainMap::identity(original),
                           r.include.compose_after(r.project)))
        throw std::logic_error("reduce: homotopy fails its defining relation");
    return r;
}

Reduction reduce(const ChainComplex& c) { return reduce(c, greedy_matching(c)); }

} // namespace telhom
