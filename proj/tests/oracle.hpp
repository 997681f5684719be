#pragma once

// deliberately naive byte-per-entry F2 linear algebra, independent of the
// word-packed library routines, used as a cross-check oracle

#include "telhom/chain.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<std::uint8_t>>;

inline Mat from(const telhom::f2::Matrix& m) {
    Mat out(m.rows(), std::vector<std::uint8_t>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r][c] = m.get(r, c) ? 1 : 0;
    return out;
}

inline Mat mul(const Mat& a, const Mat& b) {
    std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    Mat out(n, std::vector<std::uint8_t>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::uint8_t s = 0;
            for (std::size_t t = 0; t < k; ++t) s ^= a[i][t] & b[t][j];
            out[i][j] = s;
        }
    return out;
}

inline std::size_t rank(Mat m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && !m[piv][c]) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m[i][c])
                for (std::size_t j = c; j < cols; ++j) m[i][j] ^= m[r][j];
        ++r;
    }
    return r;
}

inline std::size_t betti(const telhom::ChainComplex& c, std::size_t k) {
    return c.dim(k) - rank(from(c.boundary(k))) - rank(from(c.boundary(k + 1)));
}

} // namespace oracle
