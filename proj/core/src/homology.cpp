#include "telhom/homology.hpp"

#include <stdexcept>

namespace telhom {

HomologySpace::HomologySpace(f2::Matrix ker_of, f2::Matrix im_of)
    : ambient_(ker_of.cols()), ker_of_(std::move(ker_of)) {
    if (im_of.rows() != ambient_)
        throw std::invalid_argument("homology: ambient dimension mismatch");

    f2::Echelon image(ambient_);
    std::vector<f2::Vector> image_basis;
    for (std::size_t c = 0; c < im_of.cols(); ++c) {
        f2::Vector v = im_of.column(c);
        if (image.insert(v)) image_basis.push_back(std::move(v));
    }

    f2::Echelon span = image;   // image plus accepted representatives
    for (auto& v : f2::kernel_basis(ker_of_)) {
        f2::Vector r = v;
        span.reduce(r);
        if (!r.is_zero()) {
            span.insert(r);
            reps_.push_back(std::move(r));
        }
    }

    rep_and_image_ = f2::Matrix(ambient_, reps_.size() + image_basis.size());
    for (std::size_t i = 0; i < reps_.size(); ++i)
        rep_and_image_.set_column(i, reps_[i]);
    for (std::size_t i = 0; i < image_basis.size(); ++i)
        rep_and_image_.set_column(reps_.size() + i, image_basis[i]);
}

HomologySpace HomologySpace::homology(const ChainComplex& c, std::size_t k) {
    return HomologySpace(c.boundary(k), c.boundary(k + 1));
}

HomologySpace HomologySpace::cohomology(const ChainComplex& c, std::size_t d) {
    f2::Matrix delta_out = c.boundary(d + 1).transposed();  // C^d -> C^{d+1}
    f2::Matrix delta_in = c.boundary(d).transposed();       // C^{d-1} -> C^d
    return HomologySpace(std::move(delta_out), std::move(delta_in));
}

bool HomologySpace::is_cycle(const f2::Vector& z) const {
    return ker_of_.apply(z).is_zero();
}

f2::Vector HomologySpace::coordinates(const f2::Vector& z) const {
    if (z.size() != ambient_)
        throw std::invalid_argument("homology: coordinate query length mismatch");
    if (!is_cycle(z))
        throw std::invalid_argument("homology: coordinate query on a non-cycle");
    auto x = f2::solve(rep_and_image_, z);
    if (!x)
        throw std::logic_error("homology: cycle outside representative span");
    f2::Vector out(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i)
        if (x->get(i)) out.set(i, true);
    return out;
}

f2::Matrix induced_on_homology(const ChainMap& f, std::size_t degree,
                               const HomologySpace& src, const HomologySpace& tgt) {
    f2::Matrix comp = f.component(degree);
    f2::Matrix out(tgt.rank(), src.rank());
    for (std::size_t i = 0; i < src.rank(); ++i)
        out.set_column(i, tgt.coordinates(comp.apply(src.representatives()[i])));
    return out;
}

f2::Matrix induced_on_cohomology(const ChainMap& f, std::size_t degree,
                                 const HomologySpace& tgt_coh, const HomologySpace& src_coh) {
    f2::Matrix pull = f.component(degree).transposed();   // cochains(target) -> cochains(source)
    f2::Matrix out(src_coh.rank(), tgt_coh.rank());
    for (std::size_t i = 0; i < tgt_coh.rank(); ++i)
        out.set_column(i, src_coh.coordinates(pull.apply(tgt_coh.representatives()[i])));
    return out;
}

} // namespace telhom
