#pragma once

// Subquotient spaces ker A / im B over F2 with a deterministic choice of
// representatives, plus coordinates of arbitrary elements in that basis.
// Instantiated for homology (A = d_k, B = d_{k+1}) and cohomology
// (A = transpose d_{d+1}, B = transpose d_d). Used for betti numbers,
// induced maps, stability certificates, comparison maps and module actions.

#include "telhom/chain.hpp"

#include <vector>

namespace telhom {

class HomologySpace {
public:
    // representatives of ker(ker_of) modulo im(im_of);
    // ambient dimension = ker_of.cols() = im_of.rows()
    HomologySpace(f2::Matrix ker_of, f2::Matrix im_of);

    static HomologySpace homology(const ChainComplex& c, std::size_t k);
    static HomologySpace cohomology(const ChainComplex& c, std::size_t d);

    std::size_t ambient() const { return ambient_; }
    std::size_t rank() const { return reps_.size(); }
    const std::vector<f2::Vector>& representatives() const { return reps_; }

    bool is_cycle(const f2::Vector& z) const;
    // coordinates in the representative basis; throws if z is not in ker(ker_of)
    f2::Vector coordinates(const f2::Vector& z) const;

private:
    std::size_t ambient_;
    f2::Matrix ker_of_;
    std::vector<f2::Vector> reps_;
    f2::Matrix rep_and_image_;   // columns: representatives, then an image basis
};

// matrix of H_degree(f) in the chosen bases: columns are coordinates of
// f(representative) for each source representative
f2::Matrix induced_on_homology(const ChainMap& f, std::size_t degree,
                               const HomologySpace& src, const HomologySpace& tgt);

// pullback on cohomology: H^degree(target of f) -> H^degree(source of f)
f2::Matrix induced_on_cohomology(const ChainMap& f, std::size_t degree,
                                 const HomologySpace& tgt_coh, const HomologySpace& src_coh);

} // namespace telhom
