#include "telhom/f2.hpp"

#include <bit>
#include <algorithm>
#include <stdexcept>

namespace telhom::f2 {

void Vector::xor_in(const Vector& o) {
    if (o.n_ != n_) throw std::invalid_argument("f2: vector length mismatch in xor");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
}

bool Vector::is_zero() const {
    for (auto w : w_) if (w) return false;
    return true;
}

std::size_t Vector::popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

std::size_t Vector::lowest_bit() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
    return n_;
}

std::string Vector::to_string() const {
    std::string s;
    s.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) s.push_back(get(i) ? '1' : '0');
    return s;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void Matrix::xor_row_into(std::size_t src, std::size_t dst) {
    std::uint64_t* d = row_words(dst);
    const std::uint64_t* s = row_words(src);
    for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void Matrix::xor_vec_into_row(const Vector& v, std::size_t dst) {
    if (v.size() != cols_) throw std::invalid_argument("f2: row length mismatch");
    std::uint64_t* d = row_words(dst);
    const auto& s = v.words();
    for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::uint64_t* ra = row_words(a);
    std::uint64_t* rb = row_words(b);
    for (std::size_t i = 0; i < wpr_; ++i) std::swap(ra[i], rb[i]);
}

Vector Matrix::row(std::size_t r) const {
    Vector v(cols_);
    std::copy(row_words(r), row_words(r) + wpr_, v.words().begin());
    return v;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) if (get(r, c)) v.set(r, true);
    return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
    if (v.size() != cols_) throw std::invalid_argument("f2: set_row length mismatch");
    std::copy(v.words().begin(), v.words().end(), row_words(r));
}

void Matrix::set_column(std::size_t c, const Vector& v) {
    if (v.size() != rows_) throw std::invalid_argument("f2: set_column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) set(r, c, v.get(r));
}

bool Matrix::is_zero() const {
    for (auto w : data_) if (w) return false;
    return true;
}

std::size_t Matrix::popcount() const {
    std::size_t c = 0;
    for (auto w : data_) c += std::popcount(w);
    return c;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("f2: shape mismatch in matrix sum");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] ^= o.data_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("f2: shape mismatch in matrix product");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        const std::uint64_t* src = row_words(i);
        std::uint64_t* dst = r.row_words(i);
        for (std::size_t wi = 0; wi < wpr_; ++wi) {
            std::uint64_t w = src[wi];
            while (w) {
                std::size_t k = wi * 64 + std::countr_zero(w);
                w &= w - 1;
                const std::uint64_t* ok = o.row_words(k);
                for (std::size_t j = 0; j < o.wpr_; ++j) dst[j] ^= ok[j];
            }
        }
    }
    return r;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("f2: shape mismatch in matrix apply");
    Vector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        const std::uint64_t* rw = row_words(i);
        const auto& vw = v.words();
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < wpr_; ++j) acc ^= rw[j] & vw[j];
        if (std::popcount(acc) & 1) r.set(i, true);
    }
    return r;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t* rw = row_words(r);
        for (std::size_t wi = 0; wi < wpr_; ++wi) {
            std::uint64_t w = rw[wi];
            while (w) {
                std::size_t c = wi * 64 + std::countr_zero(w);
                w &= w - 1;
                t.set(c, r, true);
            }
        }
    }
    return t;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string Matrix::to_string() const {
    std::string s;
    s.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
        s.push_back('\n');
    }
    return s;
}

namespace {

// In-place reduced row echelon form, lowest-index pivots, full elimination
// above and below. aug (optional) receives the same row operations.
// Returns (pivot column, pivot row) pairs in column order.
std::vector<std::pair<std::size_t, std::size_t>> rref(Matrix& m, Matrix* aug) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
        std::size_t pr = m.rows();
        for (std::size_t r = next_row; r < m.rows(); ++r)
            if (m.get(r, c)) { pr = r; break; }
        if (pr == m.rows()) continue;
        m.swap_rows(pr, next_row);
        if (aug) aug->swap_rows(pr, next_row);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != next_row && m.get(r, c)) {
                m.xor_row_into(next_row, r);
                if (aug) aug->xor_row_into(next_row, r);
            }
        }
        pivots.emplace_back(c, next_row);
        ++next_row;
    }
    return pivots;
}

} // namespace

std::size_t rank(const Matrix& m) {
    Matrix w = m;
    return rref(w, nullptr).size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    Matrix w = m;
    auto pivots = rref(w, nullptr);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto [c, r] : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v.set(f, true);
        for (auto [c, r] : pivots)
            if (w.get(r, f)) v.set(c, true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows())
        throw std::invalid_argument("f2: rhs length mismatch in solve");
    Matrix w = m;
    Matrix aug(m.rows(), 1);
    aug.set_column(0, b);
    auto pivots = rref(w, &aug);
    std::vector<std::size_t> pivot_row_used(m.rows(), 0);
    Vector x(m.cols());
    for (auto [c, r] : pivots) {
        if (aug.get(r, 0)) x.set(c, true);
        pivot_row_used[r] = 1;
    }
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (!pivot_row_used[r] && aug.get(r, 0)) return std::nullopt;
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("f2: inverse of non-square matrix");
    Matrix w = m;
    Matrix aug = Matrix::identity(m.rows());
    auto pivots = rref(w, &aug);
    if (pivots.size() != m.rows()) return std::nullopt;
    return aug;
}

void Echelon::reduce(Vector& v) const {
    if (v.size() != width_) throw std::invalid_argument("f2: echelon width mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i])) v.xor_in(rows_[i]);
}

bool Echelon::insert(Vector v) {
    reduce(v);
    std::size_t p = v.lowest_bit();
    if (p == width_ && v.is_zero()) return false;
    // keep stored rows reduced against the new pivot
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].get(p)) rows_[i].xor_in(v);
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t idx = std::size_t(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
}

bool Echelon::contains(Vector v) const {
    reduce(v);
    return v.is_zero();
}

} // namespace telhom::f2
