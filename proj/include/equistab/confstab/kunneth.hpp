#pragma once

#include "equistab/core/abelian.hpp"

#include <vector>

namespace equistab {

// Tensor and Tor on canonical values by the gcd rules:
// Z/a (x) Z/b = Z/gcd(a,b), Tor(Z/a, Z/b) = Z/gcd(a,b), free ranks multiply.
FgAbGroup tensor_fg(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup tor_fg(const FgAbGroup& a, const FgAbGroup& b);

// Degree-d piece of the Kunneth formula for a product:
//   (+)_{i+j=d} A_i (x) B_j  (+)  (+)_{i+j=d-1} Tor(A_i, B_j).
// Gradings must cover all degrees <= d.
FgAbGroup kunneth(const std::vector<FgAbGroup>& a, const std::vector<FgAbGroup>& b, int d);

// Working form: graded based groups with maps, for carrying stabilization
// maps through products.  deg[d] covers d = 0..dmax.
struct GradedBased {
    std::vector<BasedGroup> deg;
    int dmax() const { return static_cast<int>(deg.size()) - 1; }
};

struct GradedMap {
    std::vector<IntMat> deg; // deg[d]: src.deg[d] -> dst.deg[d]
};

GradedBased graded_point(int dmax); // Z in degree 0, zero above
GradedMap graded_identity(const GradedBased& a);

// Kunneth of a pair with the block layout fixed as: tensor blocks for
// i = 0..d (j = d-i), then Tor blocks for i = 0..d-1 (j = d-1-i).
GradedBased kunneth_pair(const GradedBased& a, const GradedBased& b);

// Induced map on kunneth_pair for f: a -> a2, g: b -> b2.
GradedMap kunneth_pair_map(const GradedBased& a, const GradedBased& a2, const GradedBased& b, const GradedBased& b2,
                           const GradedMap& f, const GradedMap& g);

} // namespace equistab
