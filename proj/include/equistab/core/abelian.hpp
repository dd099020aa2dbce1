#pragma once

#include "equistab/core/intmat.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace equistab {

// Canonical value of a finitely generated abelian group:
// Z^free_rank + Z/t_1 + ... + Z/t_k with t_1 | t_2 | ... and each t_i >= 2.
struct FgAbGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    std::size_t num_gens() const { return free_rank + torsion.size(); }
    bool operator==(const FgAbGroup&) const = default;
    std::string to_string() const;
};

// Regroup an arbitrary multiset of cyclic orders into the canonical divisor
// chain (orders equal to 1 are dropped).
FgAbGroup canonical_fg(std::size_t free_rank, std::vector<Int> cyclic_orders);

// A finitely generated abelian group with a fixed ordered generating set.
// orders[i] == 0 means generator i is free; otherwise it has that order.
// Convention: free generators first, then torsion generators.  This is the
// working representation wherever maps have to be carried around.
struct BasedGroup {
    std::vector<Int> orders;

    static BasedGroup from_fg(const FgAbGroup& g);
    static BasedGroup zero() { return BasedGroup{}; }

    std::size_t size() const { return orders.size(); }
    bool is_trivial() const { return orders.empty(); }
    FgAbGroup canonical() const;
    // diagonal relation columns (one per torsion generator)
    IntMat relation_matrix() const;
};

// Homs between based groups are integer matrices (target.size() x
// source.size()); entries on torsion target generators only matter mod the
// order.  reduce_hom normalizes into [0, order).
IntMat reduce_hom(const BasedGroup& target, const BasedGroup& source, IntMat f);
bool hom_is_valid(const BasedGroup& target, const BasedGroup& source, const IntMat& f);
bool hom_equal(const BasedGroup& target, const BasedGroup& source, const IntMat& f, const IntMat& g);

bool hom_is_surjective(const BasedGroup& target, const BasedGroup& source, const IntMat& f);
bool hom_is_injective(const BasedGroup& target, const BasedGroup& source, const IntMat& f);
bool hom_is_iso(const BasedGroup& target, const BasedGroup& source, const IntMat& f);

// cokernel of f as a canonical value
FgAbGroup hom_cokernel(const BasedGroup& target, const BasedGroup& source, const IntMat& f);

// Quotient of Z^ngens by the columns of relations, with change-of-basis
// data: to_canonical maps old generator coordinates to coordinates in the
// canonical based group, from_canonical lifts canonical generators back.
struct PresentedGroup {
    BasedGroup group;
    IntMat to_canonical;   // group.size() x ngens
    IntMat from_canonical; // ngens x group.size()
};
PresentedGroup present_quotient(std::size_t ngens, const IntMat& relations);

// Tensor and Tor of based groups.  The generator layout records which pair
// (i, j) of source generators each output generator came from, in the order
// they appear in the output group.
struct PairLayout {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

BasedGroup tensor_group(const BasedGroup& a, const BasedGroup& b, PairLayout* layout = nullptr);
BasedGroup tor_group(const BasedGroup& a, const BasedGroup& b, PairLayout* layout = nullptr);

// Induced maps on tensor / Tor for f: a -> a2, g: b -> b2.
IntMat tensor_hom(const BasedGroup& a, const BasedGroup& a2, const BasedGroup& b, const BasedGroup& b2,
                  const IntMat& f, const IntMat& g);
IntMat tor_hom(const BasedGroup& a, const BasedGroup& a2, const BasedGroup& b, const BasedGroup& b2,
               const IntMat& f, const IntMat& g);

} // namespace equistab
