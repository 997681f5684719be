#pragma once

// Bounded chain complexes over F2 with chosen bases, chain maps and chain
// homotopies. Everything validates its defining identities at construction
// and is immutable afterwards.

#include "telhom/f2.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace telhom {

class ChainComplex {
public:
    // dims[k] = dim C_k for k = 0..top; boundaries[k] : C_{k+1} -> C_k
    // (so boundaries has dims.size()-1 entries; may be shorter if top = 0).
    ChainComplex(std::vector<std::size_t> dims, std::vector<f2::Matrix> boundaries);

    static ChainComplex zero();
    static ChainComplex point();

    std::size_t top_degree() const { return dims_.empty() ? 0 : dims_.size() - 1; }
    std::size_t dim(std::size_t k) const { return k < dims_.size() ? dims_[k] : 0; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t total_dim() const;

    // d_k : C_k -> C_{k-1}; zero-shaped matrix outside the stored range
    f2::Matrix boundary(std::size_t k) const;

    bool operator==(const ChainComplex& o) const;

private:
    std::vector<std::size_t> dims_;
    std::vector<f2::Matrix> d_;   // d_[k] : C_{k+1} -> C_k
};

std::size_t betti(const ChainComplex& c, std::size_t k);
std::vector<std::size_t> betti_all(const ChainComplex& c);

class ChainMap {
public:
    ChainMap(std::shared_ptr<const ChainComplex> source,
             std::shared_ptr<const ChainComplex> target,
             std::vector<f2::Matrix> components);

    static ChainMap identity(std::shared_ptr<const ChainComplex> c);
    static ChainMap zero(std::shared_ptr<const ChainComplex> source,
                         std::shared_ptr<const ChainComplex> target);

    const ChainComplex& source() const { return *src_; }
    const ChainComplex& target() const { return *tgt_; }
    std::shared_ptr<const ChainComplex> source_ptr() const { return src_; }
    std::shared_ptr<const ChainComplex> target_ptr() const { return tgt_; }

    // f_k : C_k -> D_k; zero-shaped outside stored range
    f2::Matrix component(std::size_t k) const;

    ChainMap compose_after(const ChainMap& first) const;  // this . first
    ChainMap operator+(const ChainMap& o) const;
    bool operator==(const ChainMap& o) const;

private:
    std::shared_ptr<const ChainComplex> src_, tgt_;
    std::vector<f2::Matrix> f_;
};

// Degree +1 maps h_k : C_k -> D_{k+1}; pure data, no identity imposed.
class ChainHomotopy {
public:
    ChainHomotopy(std::shared_ptr<const ChainComplex> source,
                  std::shared_ptr<const ChainComplex> target,
                  std::vector<f2::Matrix> components);

    static ChainHomotopy zero(std::shared_ptr<const ChainComplex> source,
                              std::shared_ptr<const ChainComplex> target);

    const ChainComplex& source() const { return *src_; }
    const ChainComplex& target() const { return *tgt_; }
    std::shared_ptr<const ChainComplex> source_ptr() const { return src_; }
    std::shared_ptr<const ChainComplex> target_ptr() const { return tgt_; }

    f2::Matrix component(std::size_t k) const;

private:
    std::shared_ptr<const ChainComplex> src_, tgt_;
    std::vector<f2::Matrix> h_;
};

// true iff g - f = d h + h d degreewise (all exact over F2)
bool validate_homotopy(const ChainHomotopy& h, const ChainMap& f, const ChainMap& g);

ChainHomotopy compose(const ChainMap& g, const ChainHomotopy& h);    // g . h
ChainHomotopy compose(const ChainHomotopy& h, const ChainMap& f);    // h . f
ChainHomotopy add(const ChainHomotopy& a, const ChainHomotopy& b);

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

// Mapping cone of f : C -> D. Degree k basis: D_k block then C_{k-1} block.
ChainComplex cone(const ChainMap& f);

// Tensor product; degree-n basis ordered by (p, i, j) lexicographically
// where p + q = n, i indexes C_p, j indexes D_q.
ChainComplex tensor_product(const ChainComplex& c, const ChainComplex& d);

// index of basis element (p, i, j) inside degree p+q of tensor_product(c, d)
std::size_t tensor_index(const ChainComplex& c, const ChainComplex& d,
                         std::size_t p, std::size_t i, std::size_t q, std::size_t j);

ChainMap tensor_map(const ChainMap& f, const ChainMap& g,
                    std::shared_ptr<const ChainComplex> source,
                    std::shared_ptr<const ChainComplex> target);

} // namespace telhom
