#pragma once

#include "equistab/core/abelian.hpp"
#include "equistab/gsets.hpp"
#include "equistab/reps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace equistab {

// Nonequivariant homology data for one stratum quotient: the groups
// H_d(C_k(M_(H)/G)) and the stabilization maps between consecutive k.
// These are inputs, not computed.  Row d = 0 is never stored: it is forced
// by the connectivity flag (Z with identity maps).
struct HomologyTable {
    int kmax = -1; // entries cover k = 0..kmax
    int dmax = 0;  // and d = 1..dmax
    // entries[k][d-1], maps[k][d-1] : H_d(C_k) -> H_d(C_{k+1}) (maps stored
    // for k < kmax), matrices in the canonical generator order of from_fg
    std::vector<std::vector<FgAbGroup>> entries;
    std::vector<std::vector<IntMat>> maps;
};

struct StratumInfo {
    bool nonempty = false;
    bool quotient_connected = false;
    bool stabilizable = false;
    std::optional<HomologyTable> table;
};

// Everything the pipeline needs to know about a G-manifold: per-stratum
// flags and optional homology tables.  The built-in model is a sum of
// regular representations, where every flag is true for every subgroup.
struct ManifoldDescriptor {
    std::size_t ambient = 0;
    std::vector<StratumInfo> strata; // indexed by lattice node
    enum class Provenance { RegularModel, UserSupplied };
    Provenance provenance = Provenance::UserSupplied;
    std::int64_t regular_multiplicity = 0;
};

// Disk model of n copies of the regular representation.
ManifoldDescriptor rho_model(const SubgroupLattice& lat, std::size_t ambient, std::int64_t n);

// Descriptor from explicit flags (tables may be attached afterwards).
ManifoldDescriptor custom_descriptor(const SubgroupLattice& lat, std::size_t ambient);

// Descriptor from a linear model: flags computed from the character data.
ManifoldDescriptor linear_model_descriptor(const SubgroupLattice& lat, const RealRepresentation& v,
                                           std::size_t ambient);

// View of the ambient-K restriction.  Exact for the regular model (the
// restriction of a regular representation is a sum of regular
// representations); for user data only K == ambient is allowed.
ManifoldDescriptor restrict_descriptor(const SubgroupLattice& lat, const ManifoldDescriptor& m, std::size_t k);

// Table access with the d = 0 row auto-filled from the connectivity flag.
// Throws ValidationError listing missing entries.
FgAbGroup table_entry(const SubgroupLattice& lat, const ManifoldDescriptor& m, std::size_t h, std::int64_t k, int d);
IntMat table_map(const SubgroupLattice& lat, const ManifoldDescriptor& m, std::size_t h, std::int64_t k, int d);

void validate_descriptor(const SubgroupLattice& lat, const ManifoldDescriptor& m);

} // namespace equistab
