#pragma once

// Equivariant homology of finite group actions through finite Borel stages,
// with stabilization certificates, a telescope cross check, the module
// action of base cohomology, and the comparison map to the orbit space for
// free actions.

#include "telhom/borel.hpp"
#include "telhom/homology.hpp"
#include "telhom/morse.hpp"

#include <cstddef>
#include <vector>

namespace telhom {

struct EquivariantOptions {
    std::size_t max_degree = 2;
    std::size_t stages = 0;        // 0 picks the policy default max_degree + 2
    bool morse_reduce = false;
};

std::size_t resolve_stages(const EquivariantOptions& opt);

struct EquivariantResult {
    std::size_t stages = 0;
    std::size_t sd_rounds = 0;
    std::vector<std::vector<std::size_t>> stage_dims;    // chain dimensions per stage
    std::vector<std::vector<std::size_t>> stage_betti;   // [stage][degree 0..max_degree]
    std::vector<std::size_t> stable;                     // betti of the last stage
    std::vector<bool> certificate;                       // last increment iso per degree
    bool certified = false;                              // all degrees certified
    std::vector<std::size_t> telescope_betti;            // degrees 0..max_degree
    bool telescope_agrees = false;
    bool morse = false;
    std::size_t cells_before = 0, cells_after = 0;       // morse mode totals
};

EquivariantResult equivariant_betti(const CellComplex& x, const Group& g,
                                    const VertexAction& action,
                                    const EquivariantOptions& opt);

// matrix in homology coordinates of capping cycles of degree `from_degree`
// against a degree p cochain of the same space
f2::Matrix cap_action(const CellComplex& space, std::size_t from_degree,
                      const HomologySpace& from, const HomologySpace& to,
                      std::size_t p, const f2::Vector& cochain);

struct ModuleActionResult {
    std::size_t stages = 0;
    std::size_t cocycle_degree = 0;
    std::size_t generators = 0;                          // rank of H^p of the base
    std::vector<std::size_t> homology_rank;              // H_j of the last stage, 0..max
    // matrices[i][j - p]: action of generator i, H_j -> H_{j-p}
    std::vector<std::vector<f2::Matrix>> matrices;
};

ModuleActionResult module_action(const CellComplex& x, const Group& g,
                                 const VertexAction& action, std::size_t cocycle_degree,
                                 const EquivariantOptions& opt);

struct KirwanResult {
    std::size_t stages = 0;
    std::vector<std::size_t> orbit_betti;                // H of X/G, 0..max
    std::vector<std::size_t> stage_betti;                // H of the last Borel stage
    std::vector<f2::Matrix> comparison;                  // per degree 0..max
    std::vector<f2::Matrix> inverse;                     // f2 inverse where defined
    std::vector<bool> iso;
    bool two_sided = false;                              // inverses check on both sides
};

// comparison with the orbit space; requires a free action
KirwanResult kirwan_comparison(const CellComplex& x, const Group& g,
                               const VertexAction& action, const EquivariantOptions& opt);

} // namespace telhom
