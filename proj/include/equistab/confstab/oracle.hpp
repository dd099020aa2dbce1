#pragma once

#include "equistab/gsets.hpp"

#include <vector>

namespace equistab {

// An explicit finite A-set: points 0..size-1 with the action of each group
// element given by a permutation table.  This is the only place concrete
// G-sets (as opposed to isomorphism classes) exist.
struct ConcreteGSet {
    std::size_t ambient = 0;
    std::size_t size = 0;
    std::vector<std::vector<std::int64_t>> action; // action[elem_index][point]
};

constexpr std::size_t kOracleSizeBound = 20;

// Coset model of an isomorphism class.
ConcreteGSet realize_gset(const SubgroupLattice& lat, const GSetClass& s);

// Cartesian product with the diagonal action.
ConcreteGSet concrete_product(const SubgroupLattice& lat, const ConcreteGSet& x, const ConcreteGSet& y);

std::int64_t concrete_fixed_points(const SubgroupLattice& lat, const ConcreteGSet& x, std::size_t k);

// Orbit decomposition of an invariant subset (whole set if empty mask);
// throws if the subset is not invariant.
GSetClass classify_subset(const SubgroupLattice& lat, const ConcreteGSet& x, const std::vector<bool>& member);
GSetClass classify_concrete(const SubgroupLattice& lat, const ConcreteGSet& x);

// Brute-force census of C_n(X)^A in the discrete model: every n-element
// invariant subset, classified by isomorphism type.  The classes appearing
// are exactly those realizable in X; counts follow the binomial product
// formula, which tests verify independently.
struct CensusEntry {
    GSetClass cls;
    std::int64_t count = 0;
};
std::vector<CensusEntry> discrete_config_oracle(const SubgroupLattice& lat, const ConcreteGSet& x, std::int64_t n);

} // namespace equistab
