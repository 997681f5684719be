#pragma once

// Finite cell complexes with ordered vertex lists and explicit face
// operators. Simplicial complexes (cells determined by strictly increasing
// vertex lists) are the constructible case; quotients by free actions may
// leave that subclass but keep valid face operators, which is all the chain
// machinery and the cup/cap formulas need.

#include "telhom/chain.hpp"
#include "telhom/group.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace telhom {

// input-condition failures of group actions (not-free, not cellular, ...)
struct ActionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class CellComplex {
public:
    struct Cell {
        std::vector<std::size_t> faces;   // faces[j] = index of the j-th face, one dimension down
        std::vector<std::size_t> verts;   // ordered vertex list, length dim+1
    };

    // validates face counts, the face-of-face identities and vertex lists
    explicit CellComplex(std::vector<std::vector<Cell>> cells);

    static CellComplex point();
    static CellComplex discrete(std::size_t n_vertices);
    // full simplicial complex generated by the facets (all faces added)
    static CellComplex from_facets(std::size_t n_vertices,
                                   std::vector<std::vector<std::size_t>> facets);

    std::size_t top_dim() const { return cells_.size() - 1; }
    std::size_t size(std::size_t k) const { return k < cells_.size() ? cells_[k].size() : 0; }
    std::size_t vertex_count() const { return size(0); }
    std::size_t total_cells() const;
    const Cell& cell(std::size_t k, std::size_t i) const { return cells_[k][i]; }
    std::size_t face(std::size_t k, std::size_t i, std::size_t j) const {
        return cells_[k][i].faces[j];
    }

    // keep vertex positions 0..p / positions dim-q..dim
    std::size_t front_face(std::size_t k, std::size_t i, std::size_t p) const;
    std::size_t back_face(std::size_t k, std::size_t i, std::size_t q) const;

    // true when every cell has a strictly increasing vertex list that no
    // other cell of the same dimension shares
    bool is_simplicial() const { return simplicial_; }
    // lookup by exact vertex list; requires is_simplicial()
    std::optional<std::size_t> find(std::size_t k, const std::vector<std::size_t>& verts) const;

    std::shared_ptr<const ChainComplex> chain() const { return chain_; }

private:
    std::vector<std::vector<Cell>> cells_;
    bool simplicial_ = false;
    std::shared_ptr<const ChainComplex> chain_;
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> lookup_;
};

// join of simplicial complexes; b's vertices are appended after a's
CellComplex join(const CellComplex& a, const CellComplex& b);

// product of simplicial complexes, triangulated by monotone staircase chains
// in the vertex grid; vertex (x, y) gets index x * b.vertex_count() + y
CellComplex product(const CellComplex& a, const CellComplex& b);

// chain map induced by a vertex map between simplicial complexes; cells whose
// image vertex list has repeats map to zero
ChainMap induced_chain_map(const CellComplex& x, const CellComplex& y,
                           const std::vector<std::size_t>& vertex_map);

// barycentric subdivision of an arbitrary cell complex
struct Subdivision {
    CellComplex complex;
    // [k][cell of sd] -> (dim, index) of the carrier cell in x
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> carrier;
    // last-vertex comparison chain map C(sd x) -> C(x)
    ChainMap flatten;
};
Subdivision barycentric(const CellComplex& x);

// group actions given on vertices: action[g][v] = image vertex
using VertexAction = std::vector<std::vector<std::size_t>>;

// shape, permutation, homomorphism and cellularity checks; throws ActionError
void validate_action(const CellComplex& x, const Group& g, const VertexAction& action);

// per-element, per-dimension cell permutations induced by a vertex action
// (images found by sorted vertex lists, so order twists are allowed)
struct CellAction {
    std::vector<std::vector<std::vector<std::size_t>>> map;   // [g][k][cell]
};
CellAction cell_action(const CellComplex& x, const Group& g, const VertexAction& action);

// true iff every element carries every cell's vertex list to a strictly
// increasing list, i.e. the action respects the chosen vertex order on cells
bool action_order_compatible(const CellComplex& x, const Group& g, const VertexAction& action);

// action induced on the barycentric subdivision (sd vertices = cells of x);
// always order compatible because sd cells list carriers by ascending dimension
VertexAction subdivision_action(const CellComplex& x, const Group& g, const VertexAction& action);

// Quotient of a free action. The input is subdivided barycentrically when the
// action twists cell orders or fixes a cell setwise; a genuinely non-free
// action surfaces as a fixed vertex after at most two rounds and raises
// ActionError. `domain` is the complex actually quotiented.
struct Quotient {
    CellComplex domain;
    CellComplex complex;
    std::size_t sd_rounds = 0;
    std::vector<std::vector<std::size_t>> orbit;   // [k][cell of domain] -> orbit cell
    std::vector<std::vector<std::size_t>> rep;     // [k][orbit cell] -> cell of domain
};
Quotient quotient(const CellComplex& x, const Group& g, const VertexAction& action);

// descend an equivariant chain map between covered spaces to the quotients
ChainMap descend(const ChainMap& f, const Quotient& src, const Quotient& tgt);

// cochains are f2 row vectors indexed like the cells of one dimension
f2::Vector coboundary(const CellComplex& x, std::size_t p, const f2::Vector& a);
// cup product in C^{p+q}: (a cup b)(s) = a(front_p s) b(back_q s)
f2::Vector cup(const CellComplex& x, std::size_t p, const f2::Vector& a,
               std::size_t q, const f2::Vector& b);
// cap product C_n x C^p -> C_{n-p}: s cap a = a(back_p s) front_{n-p} s
f2::Vector cap(const CellComplex& x, std::size_t n, const f2::Vector& z,
               std::size_t p, const f2::Vector& a);

} // namespace telhom
