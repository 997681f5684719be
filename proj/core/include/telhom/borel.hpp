#pragma once

// Finite stages of the Borel construction: X x_G EG_N where EG_N is the
// (N+1)-fold join of the group with itself. The diagonal action on X x EG_N
// is always free on vertices and setwise fixes no cell, so the orbit
// quotient is a genuine cell complex at every stage.

#include "telhom/group.hpp"
#include "telhom/simplicial.hpp"
#include "telhom/telescope.hpp"

#include <cstddef>
#include <vector>

namespace telhom {

// join of n+1 copies of the group as a point cloud; vertex (g, level l) has
// index l * |G| + g; requires |G| > 1
CellComplex milnor_eg(const Group& g, std::size_t n);

// left translation on every level
VertexAction eg_action(const Group& g, std::size_t n);

struct BorelSequence {
    CellComplex domain;                 // X as used, subdivided once if the
                                        // action twisted cell orders
    VertexAction domain_action;
    std::size_t sd_rounds = 0;

    std::vector<CellComplex> spaces;    // (X x EG_N)/G for N = 0..K
    std::vector<CellComplex> bases;     // EG_N/G
    ComplexSequence stage_chains;       // chains of spaces with descended increments
    ComplexSequence base_chains;
    std::vector<ChainMap> projections;  // space_N -> base_N

    // last stage kept whole so comparison maps can still be descended:
    // the quotient of X x EG_K and the projection of its domain onto X
    Quotient last_space;
    ChainMap last_to_domain;
};

// builds stages 0..stages; requires |G| > 1 (the trivial group needs no
// Borel construction, its equivariant homology is plain homology)
BorelSequence borel_sequence(const CellComplex& x, const Group& g,
                             const VertexAction& action, std::size_t stages);

} // namespace telhom
