#pragma once

// Dense bit-packed linear algebra over the two-element field.
// Rows are packed into 64-bit words; elimination uses deterministic
// lowest-index pivoting so every derived basis is reproducible bit for bit.

#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace telhom::f2 {

class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void xor_in(const Vector& o);
    bool is_zero() const;
    std::size_t popcount() const;
    // index of lowest set bit, or size() if zero
    std::size_t lowest_bit() const;

    bool operator==(const Vector& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Vector& o) const { return !(*this == o); }

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

    std::string to_string() const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t m = std::uint64_t(1) << (c & 63);
        std::uint64_t& w = data_[r * wpr_ + (c >> 6)];
        if (v) w |= m; else w &= ~m;
    }
    void flip(std::size_t r, std::size_t c) {
        data_[r * wpr_ + (c >> 6)] ^= std::uint64_t(1) << (c & 63);
    }

    const std::uint64_t* row_words(std::size_t r) const { return data_.data() + r * wpr_; }
    std::uint64_t* row_words(std::size_t r) { return data_.data() + r * wpr_; }
    std::size_t words_per_row() const { return wpr_; }

    void xor_row_into(std::size_t src, std::size_t dst);   // row dst ^= row src
    void xor_vec_into_row(const Vector& v, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    void set_row(std::size_t r, const Vector& v);
    void set_column(std::size_t c, const Vector& v);

    bool is_zero() const;
    std::size_t popcount() const;

    Matrix operator+(const Matrix& o) const;   // entrywise xor
    Matrix operator*(const Matrix& o) const;
    Vector apply(const Vector& v) const;       // matrix * column vector
    Matrix transposed() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

std::size_t rank(const Matrix& m);
std::vector<Vector> kernel_basis(const Matrix& m);
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);

// Growable reduced-echelon row basis. insert() keeps the stored rows fully
// reduced against each other, so residues are canonical for a fixed insertion
// order. Used for image spans and homology representative selection.
class Echelon {
public:
    explicit Echelon(std::size_t width) : width_(width) {}

    // reduce v against the basis in place; returns the residue's lowest bit
    // (== width if v reduced to zero)
    void reduce(Vector& v) const;
    // insert v (reduced first); returns true if it enlarged the span
    bool insert(Vector v);
    bool contains(Vector v) const;

    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<Vector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    std::size_t width_;
    std::vector<Vector> rows_;        // sorted by pivot ascending
    std::vector<std::size_t> pivots_;
};

} // namespace telhom::f2
