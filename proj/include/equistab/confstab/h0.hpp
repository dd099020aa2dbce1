#pragma once

#include "equistab/confstab/descriptor.hpp"
#include "equistab/stability/module.hpp"

#include <string>
#include <vector>

namespace equistab {

// Chain-level presentation of degree-zero Bredon homology of the disjoint
// union of all configuration spaces, as a module over the stabilization
// operators, graded by the number of configured points.
//
// Generators: for each level K <= G, one generator per K-set class T (a
// component of C(M)^K), in grade |T|.  Relations: for H < K and each K-set
// class T, the class of res^K_H T at level H equals [K:H] times the class
// of T at level K.  Operators: sigma_{G/H'} sends the level-K class of T to
// the class of T + res^G_K [G/H'].
struct H0Presentation {
    GradedModule module; // integer grades 0..bound

    struct Generator {
        std::size_t level = 0; // lattice node
        GSetClass cls;
    };
    std::vector<std::vector<Generator>> generators;          // per grade
    std::vector<std::vector<std::string>> relations;         // per grade, rendered
    std::vector<FgAbGroup> h0;                               // value per grade
    std::vector<std::string> notes;
};

H0Presentation bredon_h0_presentation(const SubgroupLattice& lat, const ManifoldDescriptor& m, std::int64_t bound);

} // namespace equistab
