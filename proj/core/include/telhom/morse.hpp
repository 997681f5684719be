#pragma once

// Algebraic discrete Morse reduction: cancel matched pairs of basis elements
// whose boundary coefficient is 1, shrinking a complex while carrying along
// an inclusion, a projection and a homotopy that certify the equivalence.

#include "telhom/chain.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace telhom {

struct MorseMatching {
    // pairs[k] lists (a, b): element a of degree k matched with b of degree
    // k+1; every element appears in at most one pair
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs;

    std::size_t pair_count() const;
};

// deterministic greedy matching, kept acyclic incrementally
MorseMatching greedy_matching(const ChainComplex& c);

struct Reduction {
    std::shared_ptr<const ChainComplex> original;
    std::shared_ptr<const ChainComplex> reduced;
    ChainMap include;       // reduced -> original
    ChainMap project;       // original -> reduced, project . include = id
    ChainHomotopy homotopy; // on original: id + include . project = d h + h d
};

// cancel the matched pairs one at a time; throws if the matching turns out
// cyclic (some pair never regains an odd coefficient)
Reduction reduce(const ChainComplex& c, const MorseMatching& m);
Reduction reduce(const ChainComplex& c);

} // namespace telhom
