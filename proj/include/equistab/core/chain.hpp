#pragma once

#include "equistab/core/abelian.hpp"
#include "equistab/core/intmat.hpp"

#include <vector>

namespace equistab {

// Chain complex of free abelian groups.  boundaries[n] : C_{n+1} -> C_n,
// so boundaries.size() == ranks.size() - 1 (or 0 for a single degree).
struct IntChainComplex {
    std::vector<std::size_t> ranks;
    std::vector<IntMat> boundaries;

    std::size_t top_degree() const { return ranks.empty() ? 0 : ranks.size() - 1; }
    // index of the first degree pair whose composite is nonzero, or -1
    int first_bad_composite() const;
    void validate() const; // shapes + d^2 == 0
};

// Homology values in all degrees.
std::vector<FgAbGroup> homology(const IntChainComplex& c);

// Homology with enough change-of-basis data to push cycles through chain
// maps: for degree n, a basis of ker d_n and the canonical presentation of
// ker/im in those coordinates.
struct DegreeHomology {
    BasedGroup h;
    IntMat cycle_basis; // ranks[n] x kdim
    IntMat to_h;        // h.size() x kdim
    IntMat from_h;      // kdim x h.size()
};

struct ChainHomology {
    std::vector<DegreeHomology> degrees;
};

ChainHomology chain_homology(const IntChainComplex& c);

// Induced map on degree-n homology of a chain map (given degreewise as
// matrices phi[n] : C_n(src) -> C_n(dst)).
IntMat induced_map(const ChainHomology& src, const ChainHomology& dst,
                   const std::vector<IntMat>& phi, std::size_t degree);

} // namespace equistab
