#pragma once

// Mapping telescopes of finite sequences of chain complexes over F2.
//
// A sequence is C_0 -> C_1 -> ... -> C_K with increments a_N : C_N -> C_{N+1}.
// The telescope carries, per stage, a "base" copy of C_N and (below the last
// stage) a "cylinder" copy shifted up one degree. The differential of a
// cylinder element adds its stage-N base copy and its image in stage N+1,
// which glues the stages into a homotopy colimit; the finite truncation
// deformation-retracts onto the last stage.

#include "telhom/chain.hpp"

#include <memory>
#include <vector>

namespace telhom {

class ComplexSequence {
public:
    ComplexSequence(std::vector<std::shared_ptr<const ChainComplex>> stages,
                    std::vector<ChainMap> increments);

    std::size_t stage_count() const { return stages_.size(); }
    const ChainComplex& stage(std::size_t n) const { return *stages_[n]; }
    std::shared_ptr<const ChainComplex> stage_ptr(std::size_t n) const { return stages_[n]; }
    const ChainMap& increment(std::size_t n) const { return increments_[n]; }

    // composite increment stage `from` -> stage `to` (identity when equal)
    ChainMap transition(std::size_t from, std::size_t to) const;

    ComplexSequence prefix(std::size_t n_stages) const;

private:
    std::vector<std::shared_ptr<const ChainComplex>> stages_;
    std::vector<ChainMap> increments_;
};

class TelescopeComplex {
public:
    struct Entry {
        std::size_t stage;
        bool cylinder;        // degree = local degree + 1
        std::size_t local;    // stage-local basis index
    };

    explicit TelescopeComplex(ComplexSequence seq);

    const ComplexSequence& sequence() const { return seq_; }
    const ChainComplex& complex() const { return *cx_; }
    std::shared_ptr<const ChainComplex> complex_ptr() const { return cx_; }
    std::size_t stage_count() const { return seq_.stage_count(); }

    std::size_t index(std::size_t degree, std::size_t stage, bool cylinder,
                      std::size_t local) const;
    const std::vector<Entry>& entries(std::size_t degree) const;

private:
    ComplexSequence seq_;
    std::shared_ptr<const ChainComplex> cx_;
    std::vector<std::vector<Entry>> entries_;
    std::vector<std::vector<std::size_t>> base_off_, cyl_off_;   // [degree][stage]
};

// Morphism datum between sequences of equal length: per-stage chain maps
// plus step homotopies k_N : C_N -> D_{N+1} (degree +1) correcting the
// failure of the squares to commute on the nose.
class TelescopeMorphism {
public:
    TelescopeMorphism(ComplexSequence source, ComplexSequence target,
                      std::vector<ChainMap> stage_maps,
                      std::vector<ChainHomotopy> step_homotopies);

    const ComplexSequence& source() const { return src_; }
    const ComplexSequence& target() const { return tgt_; }
    const ChainMap& stage_map(std::size_t n) const { return stage_maps_[n]; }
    const ChainHomotopy& step_homotopy(std::size_t n) const { return steps_[n]; }

    static TelescopeMorphism identity(const ComplexSequence& seq);
    static TelescopeMorphism zero(const ComplexSequence& source, const ComplexSequence& target);

    // this . first, with step maps (chi . kappa) + (lambda . phi)
    TelescopeMorphism compose_after(const TelescopeMorphism& first) const;

private:
    ComplexSequence src_, tgt_;
    std::vector<ChainMap> stage_maps_;
    std::vector<ChainHomotopy> steps_;
};

// Homotopy datum between two morphism data over the same sequences:
// per-stage degree +1 maps and per-step degree +2 maps, satisfying the
// stage relation (validated) and the step relation (validated).
class TelescopeHomotopyDatum {
public:
    TelescopeHomotopyDatum(TelescopeMorphism first, TelescopeMorphism second,
                           std::vector<ChainHomotopy> stage_homotopies,
                           std::vector<std::vector<f2::Matrix>> step_homotopies);

    const TelescopeMorphism& first() const { return first_; }
    const TelescopeMorphism& second() const { return second_; }
    const ChainHomotopy& stage_homotopy(std::size_t n) const { return stage_h_[n]; }
    const std::vector<f2::Matrix>& step_homotopy(std::size_t n) const { return step_h_[n]; }

private:
    TelescopeMorphism first_, second_;
    std::vector<ChainHomotopy> stage_h_;
    std::vector<std::vector<f2::Matrix>> step_h_;   // [stage][degree k]: C_k -> D_{k+2}
};

TelescopeComplex build_telescope(ComplexSequence seq);

// induced chain map between telescopes (validated at construction)
ChainMap telescope_map(const TelescopeMorphism& m,
                       const TelescopeComplex& src_tel, const TelescopeComplex& tgt_tel);

// induced chain homotopy between telescope_map(first) and telescope_map(second)
ChainHomotopy telescope_homotopy(const TelescopeHomotopyDatum& datum,
                                 const TelescopeComplex& src_tel,
                                 const TelescopeComplex& tgt_tel);

struct TelescopeProduct {
    std::shared_ptr<const ChainComplex> source;   // Tel(C) tensor Tel(D)
    TelescopeComplex target;                      // telescope of stagewise tensors
    ChainMap map;
};

// pairing Tel(C) (x) Tel(D) -> Tel(C (x) D); stage counts must agree
TelescopeProduct telescope_product(const TelescopeComplex& tc, const TelescopeComplex& td);

// Chain-level shift: telescope of the truncated sequence includes into the
// full telescope by pushing every stage one step up the ladder. True iff the
// mapping cone is acyclic in all degrees <= stage_count-2 (the range where
// the truncated telescope can see homology).
bool shift_is_quasi_iso(const TelescopeComplex& tel);

} // namespace telhom
