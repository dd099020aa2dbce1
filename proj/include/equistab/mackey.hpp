#pragma once

#include "equistab/core/intmat.hpp"
#include "equistab/groups.hpp"

#include <map>
#include <string>
#include <vector>

namespace equistab {

// Mackey functor with free abelian levels over the master lattice.  For
// each pair H <= K the data holds res_{H<=K} : M(G/K) -> M(G/H) and
// tr_{H<=K} : M(G/H) -> M(G/K).  Weyl actions are identity throughout
// (abelian ambient group).
struct MackeyFunctorData {
    std::string name;
    std::vector<std::size_t> level_rank;                  // per lattice node
    std::vector<std::vector<std::string>> basis_labels;   // per lattice node
    std::map<std::pair<std::size_t, std::size_t>, IntMat> res; // key (h, k) with h <= k
    std::map<std::pair<std::size_t, std::size_t>, IntMat> tr;
    std::vector<IntMat> weyl; // action of G/H on M(G/H); identity here

    const IntMat& res_at(std::size_t h, std::size_t k) const { return res.at({h, k}); }
    const IntMat& tr_at(std::size_t h, std::size_t k) const { return tr.at({h, k}); }
    const IntMat& weyl_at(std::size_t h) const { return weyl.at(h); }
};

// Constant Mackey functor Z: every level Z, restrictions identity,
// transfers multiplication by the index.
MackeyFunctorData constant_Z(const SubgroupLattice& lat);

// Burnside Mackey functor: level at H is free on the orbits [H/L] for
// L <= H, restriction by the double coset formula, transfer by induction.
MackeyFunctorData burnside_mackey(const SubgroupLattice& lat);

struct MackeyReport {
    bool pass = true;
    std::string first_failure;
};

// Checks shapes, res/tr functoriality along all chains, identity at equal
// pairs, and the double coset identities (comparable pairs and the full
// mixed form inside every ambient subgroup).  Failures are report content.
MackeyReport verify_mackey_axioms(const SubgroupLattice& lat, const MackeyFunctorData& m);

} // namespace equistab
