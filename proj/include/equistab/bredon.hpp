#pragma once

#include "equistab/core/chain.hpp"
#include "equistab/groups.hpp"
#include "equistab/mackey.hpp"

#include <vector>

namespace equistab {

// Equivariant cell: one orbit of cells G/H x D^dim.
struct GCWCell {
    int dim = 0;
    std::size_t isotropy = 0; // lattice node
};

// Boundary term from an n-cell to an (n-1)-cell: the orbit map
// G/H_from -> G/H_to sending the base coset to coset_elem * H_to, weighted
// by an integer coefficient.  Requires H_from <= H_to.
struct GCWBoundaryTerm {
    std::size_t from = 0;
    std::size_t to = 0;
    std::int64_t coset_elem = 0; // element index in the master group
    Int coeff = 0;
};

struct GCWComplex {
    std::vector<GCWCell> cells;
    std::vector<GCWBoundaryTerm> boundary;

    int top_dim() const;
    std::vector<std::size_t> cells_in_dim(int n) const; // cell indices, listing order
};

// Structural checks plus d^2 == 0 both for the assembled constant-Z complex
// and for every fixed-point subcomplex.
void validate_gcw(const SubgroupLattice& lat, const GCWComplex& x);

// Cellular Bredon chains: degree n is the sum of M(G/H_e) over n-cells e;
// the block from cell e to cell f is sum over boundary terms of
// coeff * tr_{H_e <= H_f} (Weyl translates act as the identity here).
IntChainComplex assemble_bredon_complex(const SubgroupLattice& lat, const GCWComplex& x, const MackeyFunctorData& m);

// Nonequivariant cellular chain complex of X^K: each G-cell with isotropy
// containing K contributes one cell per coset, boundaries expanded through
// coset representatives.
IntChainComplex fixed_point_complex(const SubgroupLattice& lat, const GCWComplex& x, std::size_t k);

} // namespace equistab
