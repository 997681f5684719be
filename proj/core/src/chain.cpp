#include "telhom/chain.hpp"

#include <numeric>
#include <stdexcept>

namespace telhom {

ChainComplex::ChainComplex(std::vector<std::size_t> dims, std::vector<f2::Matrix> boundaries)
    : dims_(std::move(dims)), d_(std::move(boundaries)) {
    if (dims_.empty()) dims_.push_back(0);
    if (d_.size() + 1 != dims_.size())
        throw std::invalid_argument("chain: need exactly one boundary per positive degree");
    for (std::size_t k = 0; k < d_.size(); ++k) {
        if (d_[k].rows() != dims_[k] || d_[k].cols() != dims_[k + 1])
            throw std::invalid_argument("chain: boundary shape mismatch at degree " +
                                        std::to_string(k + 1));
    }
    for (std::size_t k = 0; k + 1 < d_.size(); ++k) {
        if (!(d_[k] * d_[k + 1]).is_zero())
            throw std::invalid_argument("chain: d*d != 0 at degree " + std::to_string(k + 2));
    }
    // normalize away trailing zero degrees so equal complexes compare equal
    while (dims_.size() > 1 && dims_.back() == 0) {
        dims_.pop_back();
        d_.pop_back();
    }
}

ChainComplex ChainComplex::zero() { return ChainComplex({0}, {}); }

ChainComplex ChainComplex::point() { return ChainComplex({1}, {}); }

std::size_t ChainComplex::total_dim() const {
    return std::accumulate(dims_.begin(), dims_.end(), std::size_t(0));
}

f2::Matrix ChainComplex::boundary(std::size_t k) const {
    if (k >= 1 && k - 1 < d_.size()) return d_[k - 1];
    if (k == 0) return f2::Matrix(0, dim(0));
    return f2::Matrix(dim(k - 1), dim(k));
}

bool ChainComplex::operator==(const ChainComplex& o) const {
    return dims_ == o.dims_ && d_ == o.d_;
}

std::size_t betti(const ChainComplex& c, std::size_t k) {
    if (k > c.top_degree()) return 0;
    std::size_t rk = f2::rank(c.boundary(k));        // rank d_k (zero matrix if k=0)
    std::size_t rk1 = f2::rank(c.boundary(k + 1));   // rank d_{k+1}
    return c.dim(k) - rk - rk1;
}

std::vector<std::size_t> betti_all(const ChainComplex& c) {
    std::vector<std::size_t> out(c.top_degree() + 1);
    std::vector<std::size_t> ranks(c.top_degree() + 2, 0);
    for (std::size_t k = 1; k <= c.top_degree(); ++k) ranks[k] = f2::rank(c.boundary(k));
    for (std::size_t k = 0; k <= c.top_degree(); ++k)
        out[k] = c.dim(k) - ranks[k] - ranks[k + 1];
    return out;
}

ChainMap::ChainMap(std::shared_ptr<const ChainComplex> source,
                   std::shared_ptr<const ChainComplex> target,
                   std::vector<f2::Matrix> components)
    : src_(std::move(source)), tgt_(std::move(target)), f_(std::move(components)) {
    if (!src_ || !tgt_) throw std::invalid_argument("chain map: null complex");
    std::size_t need = src_->top_degree() + 1;
    if (f_.size() < need) f_.resize(need);
    for (std::size_t k = 0; k < f_.size(); ++k) {
        std::size_t r = tgt_->dim(k), c = src_->dim(k);
        if (f_[k].rows() == 0 && f_[k].cols() == 0) f_[k] = f2::Matrix(r, c);
        if (f_[k].rows() != r || f_[k].cols() != c)
            throw std::invalid_argument("chain map: component shape mismatch at degree " +
                                        std::to_string(k));
    }
    // commuting with the boundary, checked exactly
    std::size_t topk = std::max(src_->top_degree(), tgt_->top_degree());
    for (std::size_t k = 1; k <= topk + 1; ++k) {
        f2::Matrix lhs = tgt_->boundary(k) * component(k);
        f2::Matrix rhs = component(k - 1) * src_->boundary(k);
        if (lhs != rhs)
            throw std::invalid_argument("chain map: square fails to commute at degree " +
                                        std::to_string(k));
    }
}

ChainMap ChainMap::identity(std::shared_ptr<const ChainComplex> c) {
    std::vector<f2::Matrix> comps;
    for (std::size_t k = 0; k <= c->top_degree(); ++k)
        comps.push_back(f2::Matrix::identity(c->dim(k)));
    auto tgt = c;
    return ChainMap(std::move(c), std::move(tgt), std::move(comps));
}

ChainMap ChainMap::zero(std::shared_ptr<const ChainComplex> source,
                        std::shared_ptr<const ChainComplex> target) {
    return ChainMap(std::move(source), std::move(target), {});
}

f2::Matrix ChainMap::component(std::size_t k) const {
    if (k < f_.size()) return f_[k];
    return f2::Matrix(tgt_->dim(k), src_->dim(k));
}

ChainMap ChainMap::compose_after(const ChainMap& first) const {
    if (!(first.target() == source()))
        throw std::invalid_argument("chain map: composition domain mismatch");
    std::vector<f2::Matrix> comps;
    std::size_t topk = first.source().top_degree();
    for (std::size_t k = 0; k <= topk; ++k)
        comps.push_back(component(k) * first.component(k));
    return ChainMap(first.source_ptr(), tgt_, std::move(comps));
}

ChainMap ChainMap::operator+(const ChainMap& o) const {
    if (!(source() == o.source()) || !(target() == o.target()))
        throw std::invalid_argument("chain map: sum shape mismatch");
    std::vector<f2::Matrix> comps;
    for (std::size_t k = 0; k < std::max(f_.size(), o.f_.size()); ++k)
        comps.push_back(component(k) + o.component(k));
    return ChainMap(src_, tgt_, std::move(comps));
}

bool ChainMap::operator==(const ChainMap& o) const {
    if (!(source() == o.source()) || !(target() == o.target())) return false;
    for (std::size_t k = 0; k < std::max(f_.size(), o.f_.size()); ++k)
        if (component(k) != o.component(k)) return false;
    return true;
}

ChainHomotopy::ChainHomotopy(std::shared_ptr<const ChainComplex> source,
                             std::shared_ptr<const ChainComplex> target,
                             std::vector<f2::Matrix> components)
    : src_(std::move(source)), tgt_(std::move(target)), h_(std::move(components)) {
    if (!src_ || !tgt_) throw std::invalid_argument("chain homotopy: null complex");
    std::size_t need = src_->top_degree() + 1;
    if (h_.size() < need) h_.resize(need);
    for (std::size_t k = 0; k < h_.size(); ++k) {
        std::size_t r = tgt_->dim(k + 1), c = src_->dim(k);
        if (h_[k].rows() == 0 && h_[k].cols() == 0) h_[k] = f2::Matrix(r, c);
        if (h_[k].rows() != r || h_[k].cols() != c)
            throw std::invalid_argument("chain homotopy: component shape mismatch at degree " +
                                        std::to_string(k));
    }
}

ChainHomotopy ChainHomotopy::zero(std::shared_ptr<const ChainComplex> source,
                                  std::shared_ptr<const ChainComplex> target) {
    return ChainHomotopy(std::move(source), std::move(target), {});
}

f2::Matrix ChainHomotopy::component(std::size_t k) const {
    if (k < h_.size()) return h_[k];
    return f2::Matrix(tgt_->dim(k + 1), src_->dim(k));
}

bool validate_homotopy(const ChainHomotopy& h, const ChainMap& f, const ChainMap& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target()) ||
        !(h.source() == f.source()) || !(h.target() == f.target()))
        throw std::invalid_argument("validate_homotopy: shape mismatch");
    const ChainComplex& C = f.source();
    const ChainComplex& D = f.target();
    std::size_t topk = std::max(C.top_degree(), D.top_degree()) + 1;
    for (std::size_t k = 0; k <= topk; ++k) {
        f2::Matrix diff = f.component(k) + g.component(k);
        f2::Matrix dh = D.boundary(k + 1) * h.component(k);
        f2::Matrix hd = (k == 0) ? f2::Matrix(D.dim(0), C.dim(0))
                                 : h.component(k - 1) * C.boundary(k);
        if (diff != dh + hd) return false;
    }
    return true;
}

ChainHomotopy compose(const ChainMap& g, const ChainHomotopy& h) {
    if (!(g.source() == h.target()))
        throw std::invalid_argument("compose: map/homotopy domain mismatch");
    std::vector<f2::Matrix> comps;
    for (std::size_t k = 0; k <= h.source().top_degree() + 1; ++k)
        comps.push_back(g.component(k + 1) * h.component(k));
    return ChainHomotopy(h.source_ptr(), g.target_ptr(), std::move(comps));
}

ChainHomotopy compose(const ChainHomotopy& h, const ChainMap& f) {
    if (!(f.target() == h.source()))
        throw std::invalid_argument("compose: homotopy/map domain mismatch");
    std::vector<f2::Matrix> comps;
    for (std::size_t k = 0; k <= f.source().top_degree() + 1; ++k)
        comps.push_back(h.component(k) * f.component(k));
    return ChainHomotopy(f.source_ptr(), h.target_ptr(), std::move(comps));
}

ChainHomotopy add(const ChainHomotopy& a, const ChainHomotopy& b) {
    if (!(a.source() == b.source()) || !(a.target() == b.target()))
        throw std::invalid_argument("add: homotopy shape mismatch");
    std::vector<f2::Matrix> comps;
    for (std::size_t k = 0; k <= a.source().top_degree() + 1; ++k)
        comps.push_back(a.component(k) + b.component(k));
    return ChainHomotopy(a.source_ptr(), a.target_ptr(), std::move(comps));
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
    std::size_t topk = std::max(a.top_degree(), b.top_degree());
    std::vector<std::size_t> dims(topk + 1);
    for (std::size_t k = 0; k <= topk; ++k) dims[k] = a.dim(k) + b.dim(k);
    std::vector<f2::Matrix> d;
    for (std::size_t k = 1; k <= topk; ++k) {
        f2::Matrix m(dims[k - 1], dims[k]);
        f2::Matrix da = a.boundary(k), db = b.boundary(k);
        for (std::size_t r = 0; r < da.rows(); ++r)
            for (std::size_t c = 0; c < da.cols(); ++c)
                if (da.get(r, c)) m.set(r, c, true);
        for (std::size_t r = 0; r < db.rows(); ++r)
            for (std::size_t c = 0; c < db.cols(); ++c)
                if (db.get(r, c)) m.set(a.dim(k - 1) + r, a.dim(k) + c, true);
        d.push_back(std::move(m));
    }
    return ChainComplex(std::move(dims), std::move(d));
}

ChainComplex cone(const ChainMap& f) {
    const ChainComplex& C = f.source();
    const ChainComplex& D = f.target();
    std::size_t topk = std::max(D.top_degree(), C.top_degree() + 1);
    std::vector<std::size_t> dims(topk + 1);
    for (std::size_t k = 0; k <= topk; ++k)
        dims[k] = D.dim(k) + (k >= 1 ? C.dim(k - 1) : 0);
    std::vector<f2::Matrix> d;
    for (std::size_t k = 1; k <= topk; ++k) {
        f2::Matrix m(dims[k - 1], dims[k]);
        f2::Matrix dD = D.boundary(k);
        for (std::size_t r = 0; r < dD.rows(); ++r)
            for (std::size_t c = 0; c < dD.cols(); ++c)
                if (dD.get(r, c)) m.set(r, c, true);
        // C_{k-1} block: boundary goes to f (into D_{k-1}) plus d_C (into C_{k-2})
        f2::Matrix fc = f.component(k - 1);
        for (std::size_t r = 0; r < fc.rows(); ++r)
            for (std::size_t c = 0; c < fc.cols(); ++c)
                if (fc.get(r, c)) m.set(r, D.dim(k) + c, true);
        if (k >= 2) {
            f2::Matrix dC = C.boundary(k - 1);
            for (std::size_t r = 0; r < dC.rows(); ++r)
                for (std::size_t c = 0; c < dC.cols(); ++c)
                    if (dC.get(r, c)) m.set(D.dim(k - 1) + r, D.dim(k) + c, true);
        }
        d.push_back(std::move(m));
    }
    return ChainComplex(std::move(dims), std::move(d));
}

namespace {

std::vector<std::vector<std::size_t>> tensor_block_offsets(const ChainComplex& c,
                                                           const ChainComplex& d) {
    std::size_t topk = c.top_degree() + d.top_degree();
    std::vector<std::vector<std::size_t>> off(topk + 1);
    for (std::size_t n = 0; n <= topk; ++n) {
        off[n].assign(n + 2, 0);
        std::size_t acc = 0;
        for (std::size_t p = 0; p <= n; ++p) {
            off[n][p] = acc;
            std::size_t q = n - p;
            acc += c.dim(p) * d.dim(q);
        }
        off[n][n + 1] = acc;
    }
    return off;
}

} // namespace

std::size_t tensor_index(const ChainComplex& c, const ChainComplex& d,
                         std::size_t p, std::size_t i, std::size_t q, std::size_t j) {
    std::size_t n = p + q;
    std::size_t off = 0;
    for (std::size_t pp = 0; pp < p; ++pp) off += c.dim(pp) * d.dim(n - pp);
    return off + i * d.dim(q) + j;
}

ChainComplex tensor_product(const ChainComplex& c, const ChainComplex& d) {
    std::size_t topk = c.top_degree() + d.top_degree();
    auto off = tensor_block_offsets(c, d);
    std::vector<std::size_t> dims(topk + 1);
    for (std::size_t n = 0; n <= topk; ++n) dims[n] = off[n][n + 1];
    std::vector<f2::Matrix> bnd;
    for (std::size_t n = 1; n <= topk; ++n) {
        f2::Matrix m(dims[n - 1], dims[n]);
        for (std::size_t p = 0; p <= n; ++p) {
            std::size_t q = n - p;
            if (c.dim(p) == 0 || d.dim(q) == 0) continue;
            f2::Matrix dc = c.boundary(p);   // C_p -> C_{p-1}
            f2::Matrix dd = d.boundary(q);   // D_q -> D_{q-1}
            for (std::size_t i = 0; i < c.dim(p); ++i) {
                for (std::size_t j = 0; j < d.dim(q); ++j) {
                    std::size_t col = off[n][p] + i * d.dim(q) + j;
                    if (p >= 1) {
                        for (std::size_t r = 0; r < dc.rows(); ++r)
                            if (dc.get(r, i))
                                m.flip(off[n - 1][p - 1] + r * d.dim(q) + j, col);
                    }
                    if (q >= 1) {
                        for (std::size_t r = 0; r < dd.rows(); ++r)
                            if (dd.get(r, j))
                                m.flip(off[n - 1][p] + i * d.dim(q - 1) + r, col);
                    }
                }
            }
        }
        bnd.push_back(std::move(m));
    }
    return ChainComplex(std::move(dims), std::move(bnd));
}

ChainMap tensor_map(const ChainMap& f, const ChainMap& g,
                    std::shared_ptr<const ChainComplex> source,
                    std::shared_ptr<const ChainComplex> target) {
    const ChainComplex& cs = f.source();
    const ChainComplex& ds = g.source();
    const ChainComplex& ct = f.target();
    const ChainComplex& dt = g.target();
    if (!(*source == tensor_product(cs, ds)) || !(*target == tensor_product(ct, dt)))
        throw std::invalid_argument("tensor_map: complexes are not the stated tensor products");
    std::size_t topk = source->top_degree();
    std::vector<f2::Matrix> comps;
    for (std::size_t n = 0; n <= topk; ++n) {
        f2::Matrix m(target->dim(n), source->dim(n));
        for (std::size_t p = 0; p <= n; ++p) {
            std::size_t q = n - p;
            if (cs.dim(p) == 0 || ds.dim(q) == 0) continue;
            f2::Matrix fp = f.component(p);
            f2::Matrix gq = g.component(q);
            for (std::size_t i = 0; i < cs.dim(p); ++i)
                for (std::size_t j = 0; j < ds.dim(q); ++j) {
                    std::size_t col = tensor_index(cs, ds, p, i, q, j);
                    for (std::size_t r = 0; r < fp.rows(); ++r) {
                        if (!fp.get(r, i)) continue;
                        for (std::size_t s = 0; s < gq.rows(); ++s)
                            if (gq.get(s, j))
                                m.flip(tensor_index(ct, dt, p, r, q, s), col);
                    }
                }
        }
        comps.push_back(std::move(m));
    }
    return ChainMap(std::move(source), std::move(target), std::move(comps));
}

} // namespace telhom
