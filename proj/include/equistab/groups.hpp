#pragma once

#include "equistab/core/intmat.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace equistab {

// Finite abelian group in invariant-factor form: Z/d_1 x ... x Z/d_r with
// d_1 | d_2 | ... and each d_i >= 2.  The empty list is the trivial group.
// Elements are tuples (a_1, ..., a_r) with a_i reduced mod d_i.
struct FiniteAbelianGroup {
    std::vector<std::int64_t> factors;

    using Elem = std::vector<std::int64_t>;

    std::int64_t order() const;
    std::size_t rank() const { return factors.size(); }

    Elem zero() const { return Elem(factors.size(), 0); }
    Elem add(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem reduce(Elem a) const;

    // mixed-radix encoding of elements as 0 .. order()-1
    std::int64_t elem_index(const Elem& a) const;
    Elem elem_at(std::int64_t idx) const;

    std::string to_string() const; // "C2 x C4"
};

// Validates the divisor chain and d_i >= 2.
FiniteAbelianGroup make_group(std::vector<std::int64_t> factors);

constexpr std::int64_t kDefaultOrderBound = 64;

// The full subgroup lattice.  Nodes are canonical (sorted element-index
// sets), listed in an inclusion-refining order: ascending order, then
// lexicographic on the element set.  Node 0 is trivial, the last node is G.
struct SubgroupLattice {
    FiniteAbelianGroup group;

    struct Node {
        std::vector<std::int64_t> elems; // sorted element indices
        std::int64_t order = 0;
    };
    std::vector<Node> nodes;
    std::vector<std::vector<bool>> contains_; // contains_[h][k]: H subseteq K

    std::size_t size() const { return nodes.size(); }
    std::size_t trivial() const { return 0; }
    std::size_t full() const { return nodes.size() - 1; }

    bool leq(std::size_t h, std::size_t k) const { return contains_[h][k]; }
    std::int64_t subgroup_order(std::size_t h) const { return nodes[h].order; }
    // [K : H]; requires H subseteq K
    std::int64_t index_in(std::size_t h, std::size_t k) const;

    std::size_t meet(std::size_t h, std::size_t k) const;
    std::size_t join(std::size_t h, std::size_t k) const;

    std::vector<std::size_t> subgroups_of(std::size_t ambient) const;
    std::vector<std::size_t> minimal_overgroups_within(std::size_t h, std::size_t ambient) const;

    // find the node with exactly these member element indices (throws
    // ValidationError if the set is not a subgroup of G)
    std::size_t node_of(std::vector<std::int64_t> sorted_elem_indices) const;
    // subgroup generated by the given elements
    std::size_t node_generated_by(const std::vector<FiniteAbelianGroup::Elem>& gens) const;

    std::string subgroup_name(std::size_t h) const; // "e", "G", or "H3"
};

// Enumerates every subgroup once.  Throws ResourceError when |G| exceeds
// the bound.
SubgroupLattice enumerate_subgroups(const FiniteAbelianGroup& g, std::int64_t order_bound = kDefaultOrderBound);

// G/H in invariant-factor form together with the projection on element
// tuples.
struct QuotientGroup {
    FiniteAbelianGroup quotient;
    IntMat proj; // quotient.rank() x G.rank(); tuple maps by proj * a mod factors
    FiniteAbelianGroup::Elem project(const FiniteAbelianGroup& g, const FiniteAbelianGroup::Elem& a) const;
};
QuotientGroup quotient_by(const SubgroupLattice& lat, std::size_t h);

} // namespace equistab
