#pragma once

#include "equistab/core/intmat.hpp"
#include "equistab/groups.hpp"

#include <string>
#include <vector>

namespace equistab {

// Isomorphism class of a finite A-set for a subgroup A of the master group:
// a multiplicity vector over the master lattice (nonzero only on H <= A).
// Abelian ambient groups mean orbit types are exactly subgroups.
struct GSetClass {
    std::size_t ambient = 0;
    std::vector<std::int64_t> mult;

    bool operator==(const GSetClass&) const = default;
    bool operator<(const GSetClass& o) const {
        if (ambient != o.ambient) return ambient < o.ambient;
        return mult < o.mult;
    }
};

GSetClass empty_gset(const SubgroupLattice& lat, std::size_t ambient);
GSetClass orbit_gset(const SubgroupLattice& lat, std::size_t ambient, std::size_t h);

std::int64_t gset_cardinality(const SubgroupLattice& lat, const GSetClass& s);
std::int64_t orbit_count(const GSetClass& s);

GSetClass disjoint_union(const SubgroupLattice& lat, const GSetClass& s, const GSetClass& t);

// All classes of cardinality n over the given ambient subgroup, each once,
// in lexicographic order of the multiplicity vector (trivial subgroup
// first).
std::vector<GSetClass> enumerate_gsets(const SubgroupLattice& lat, std::size_t ambient, std::int64_t n);

// Restriction along K <= A via the double coset formula (abelian
// specialization): [A/H] becomes [A : HK] copies of [K/(K cap H)].
GSetClass restrict_gset(const SubgroupLattice& lat, const GSetClass& s, std::size_t k);

// Marks matrix over the ambient subgroup: rows and columns indexed by
// subgroups_of(ambient) in lattice order; entry(K, H) = |(A/H)^K|.
IntMat table_of_marks(const SubgroupLattice& lat, std::size_t ambient);

// Burnside multiplication: [A/H] . [A/K] = [A : HK] [A/(H cap K)],
// extended bilinearly.
GSetClass orbit_product(const SubgroupLattice& lat, std::size_t ambient, std::size_t h, std::size_t k);
GSetClass gset_product(const SubgroupLattice& lat, const GSetClass& s, const GSetClass& t);

// Fixed points of the class under K <= A, counted via marks.
std::int64_t gset_fixed_points(const SubgroupLattice& lat, const GSetClass& s, std::size_t k);

std::string gset_to_string(const SubgroupLattice& lat, const GSetClass& s);

} // namespace equistab
