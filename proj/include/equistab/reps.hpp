#pragma once

#include "equistab/groups.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace equistab {

// A character G -> Q/Z encoded by coefficients c_i mod d_i; it sends
// (a_1,...,a_r) to sum c_i a_i / d_i mod 1.
struct Character {
    std::vector<std::int64_t> coeffs;
    bool operator==(const Character&) const = default;
};

// Realified irreducible summand: a character together with the dimension of
// its realification (1 when the image lies in {0, 1/2}, else 2).  A
// character and its negative give the same summand; the canonical
// representative is the lexicographically smaller of the two.
struct RealSummand {
    Character chi;
    int realified_dim = 1;
    std::int64_t mult = 0;
};

struct RealRepresentation {
    FiniteAbelianGroup group;
    std::vector<RealSummand> summands;
};

Character canonical_character(const FiniteAbelianGroup& g, std::vector<std::int64_t> coeffs);
bool character_is_real(const FiniteAbelianGroup& g, const Character& chi); // 2*chi == 0
bool character_trivial_on(const SubgroupLattice& lat, const Character& chi, std::size_t h);

RealRepresentation make_representation(const FiniteAbelianGroup& g,
                                       const std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>>& chars);
RealRepresentation regular_rep(const FiniteAbelianGroup& g, std::int64_t n);

std::int64_t total_dim(const RealRepresentation& v);
std::int64_t fixed_dim(const SubgroupLattice& lat, const RealRepresentation& v, std::size_t h);

// Isotropy strata of the linear model within the given ambient subgroup:
// H is listed when V^H strictly exceeds V^K for every minimal overgroup
// K > H inside the ambient group.  The ambient group itself is always a
// stratum (the origin at least is fixed).
struct Stratum {
    std::size_t subgroup;
    std::int64_t fixed_dimension;
    std::vector<std::size_t> minimal_overgroups;
};
std::vector<Stratum> isotropy_strata(const SubgroupLattice& lat, const RealRepresentation& v, std::size_t ambient);

// Does the unit sphere of V contain a point of exact isotropy H (viewing V
// as a representation of the ambient subgroup)?
bool is_H_stabilizable(const SubgroupLattice& lat, const RealRepresentation& v, std::size_t h, std::size_t ambient);

} // namespace equistab
