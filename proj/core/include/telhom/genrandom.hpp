#pragma once

// Seeded generators for chain complexes with known homology, chain maps,
// stage sequences, telescope morphisms and homotopic pairs of morphisms.
// Random maps are sampled uniformly from the solution space of the exact
// defining equations, so every generated object is valid by construction.

#include "telhom/telescope.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

namespace telhom {

// uniform bits from a fixed engine; deliberately avoids the standard
// distribution adaptors, whose output is implementation defined
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    bool flip() { return (eng_() & 1) != 0; }
    std::size_t below(std::size_t n) { return n ? eng_() % n : 0; }

private:
    std::mt19937_64 eng_;
};

f2::Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);

// product of random elementary row operations; the inverse comes for free
f2::Matrix random_invertible(Rng& rng, std::size_t n, f2::Matrix* inverse_out = nullptr);

struct RandomComplex {
    std::shared_ptr<const ChainComplex> complex;
    std::vector<std::size_t> betti;   // known by construction
};

// standard-form complex (split into homology and boundary pairs) conjugated
// by random invertible basis changes in every degree
RandomComplex random_chain_complex(Rng& rng, std::size_t top_degree, std::size_t max_block);

// uniform over all chain maps src -> tgt
ChainMap random_chain_map(Rng& rng, std::shared_ptr<const ChainComplex> src,
                          std::shared_ptr<const ChainComplex> tgt);

// stages are independent random complexes, increments uniform chain maps
ComplexSequence random_sequence(Rng& rng, std::size_t stages, std::size_t top_degree,
                                std::size_t max_block);

// uniform over all morphism data between two sequences of equal length
TelescopeMorphism random_telescope_morphism(Rng& rng, const ComplexSequence& src,
                                            const ComplexSequence& tgt);

struct HomotopicPair {
    TelescopeMorphism first, second;
    TelescopeHomotopyDatum datum;
};

// second = first perturbed by the boundary of a random homotopy datum
HomotopicPair random_homotopic_pair(Rng& rng, const ComplexSequence& src,
                                    const ComplexSequence& tgt);

} // namespace telhom
