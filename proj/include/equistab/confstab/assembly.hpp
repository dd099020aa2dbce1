#pragma once

#include "equistab/confstab/descriptor.hpp"
#include "equistab/confstab/kunneth.hpp"
#include "equistab/stability/module.hpp"

#include <vector>

namespace equistab {

// Components of C_n(M)^A: classes of cardinality n whose orbit types all
// have nonempty strata.
std::vector<GSetClass> components_of_fixed_config(const SubgroupLattice& lat, const ManifoldDescriptor& m,
                                                  std::int64_t n);

// The product decomposition of the S-configuration space: one factor
// C_{k_H}(M_(H)/A) per orbit type with multiplicity k_H.
struct CsFactor {
    std::size_t subgroup = 0;
    std::int64_t k = 0;
};
std::vector<CsFactor> cs_decomposition(const SubgroupLattice& lat, const GSetClass& s, const ManifoldDescriptor& m);

// H_d of the S-configuration space, assembled by iterated Kunneth over the
// decomposition factors, reading factor homology from the tables.
FgAbGroup homology_of_CSG(const SubgroupLattice& lat, const GSetClass& s, const ManifoldDescriptor& m, int d);

// Graded based form (degrees 0..dmax) with the canonical factor fold order
// (ascending subgroup index).
GradedBased csg_graded(const SubgroupLattice& lat, const GSetClass& s, const ManifoldDescriptor& m, int dmax);

// The stabilization S -> S + [A/H]: returns the new class; the induced map
// on homology is the table sigma on the H factor tensored with the identity
// on the others.
GSetClass stabilize_component(const SubgroupLattice& lat, const GSetClass& s, std::size_t h,
                              const ManifoldDescriptor& m);
GradedMap stabilize_map(const SubgroupLattice& lat, const GSetClass& s, std::size_t h, const ManifoldDescriptor& m,
                        int dmax);

// For every realizable S with |S| <= kmax and every d <= dmax, decide by
// exact matrix comparison whether sigma_{A/H} induces an isomorphism
// H_d(C_S) -> H_d(C_{S+[A/H]}).  `guaranteed` marks rows with d <= k/2
// where k is the multiplicity of [A/H] in S.  When the input table maps are
// isomorphisms in degrees d <= k/2, every guaranteed row must come out iso;
// violations list any that do not (an input-hypothesis failure).
struct RangeCheckRow {
    GSetClass s;
    int d = 0;
    std::int64_t k = 0;
    bool iso = false;
    bool guaranteed = false;
};
struct RangeCheckReport {
    std::vector<RangeCheckRow> rows;
    bool input_maps_iso_in_range = true;
    std::vector<std::string> violations;
};
RangeCheckReport stability_range_check(const SubgroupLattice& lat, const ManifoldDescriptor& m, std::size_t h,
                                       int dmax, std::int64_t kmax);

// The degree-d slice of the total homology of the fixed-point configuration
// space as a module over the stabilization operators: grades are realizable
// classes with cardinality <= bound, pieces H_d(C_S), operators the induced
// stabilization maps.
GradedModule geometric_module(const SubgroupLattice& lat, const ManifoldDescriptor& m, int d, std::int64_t bound);

} // namespace equistab
