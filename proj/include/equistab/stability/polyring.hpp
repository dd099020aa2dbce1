#pragma once

#include "equistab/groups.hpp"
#include "equistab/stability/module.hpp"

#include <string>
#include <vector>

namespace equistab {

// Restriction P_A -> P_K of stabilization polynomial rings along K <= A:
// sigma_{A/H} maps to sigma_{K/(K cap H)} raised to [A : HK].  One image
// per subgroup of the source ambient group, in subgroups_of order.
struct PolyRingMap {
    std::size_t source_ambient = 0;
    std::size_t target_ambient = 0;
    struct Image {
        std::size_t source_subgroup = 0;
        std::size_t target_subgroup = 0; // K cap H
        std::int64_t exponent = 0;       // [A : HK]
    };
    std::vector<Image> images;
};

PolyRingMap restrict_polynomial(const SubgroupLattice& lat, std::size_t a, std::size_t k);

// Composite of restrictions A -> K -> L.
PolyRingMap compose(const SubgroupLattice& lat, const PolyRingMap& ak, const PolyRingMap& kl);

// Does every generator sigma_{K/L} of the target ring have a power in the
// image?  (Integrality of the ring extension.)
bool integrality_witness(const SubgroupLattice& lat, const PolyRingMap& p);

std::string polyringmap_to_string(const SubgroupLattice& lat, const PolyRingMap& p);

// Pull a module over P_K back to a module over P_A along the restriction
// map: the operator for H <= A acts by the [A:HK]-fold composite of the
// level operator sigma_{K/(K cap H)}.  Level operators must be named in
// subgroups_of(K) order.
GradedModule pull_back_module(const SubgroupLattice& lat, const GradedModule& level_module, const PolyRingMap& p);

// Levelwise finite-generation check: one module over P_K per subgroup K of
// the ambient group, each pulled back along the restriction and checked;
// the total verdict is the conjunction.
struct MackeyFgLevel {
    std::size_t level = 0;
    GradedModule module; // over P_level
};
struct MackeyFgReport {
    bool finitely_generated = false;
    std::vector<std::pair<std::size_t, FgReport>> levels;
    std::string first_failing_level; // empty when positive
};
MackeyFgReport mackey_fg_check(const SubgroupLattice& lat, std::size_t ambient,
                               const std::vector<MackeyFgLevel>& levels, std::int64_t window = -1);

} // namespace equistab
