#pragma once

#include "equistab/core/abelian.hpp"
#include "equistab/stability/module.hpp"

#include <optional>
#include <vector>

namespace equistab {

// A sequence A_0 -> A_1 -> ... -> A_N with maps sigma_n : A_n -> A_{n+1},
// the data underlying a Z[sigma]-module (+)_n A_n.
struct GradedSequence {
    std::vector<BasedGroup> pieces;
    std::vector<IntMat> maps; // maps.size() == pieces.size() - 1

    std::size_t length() const { return pieces.size(); }
    void validate() const;
};

// Least N such that sigma_n is an isomorphism for all n in [N, end), with
// at least `window` isomorphisms observed; otherwise the failing indices.
struct StabilizationReport {
    bool stable = false;
    std::size_t stable_from = 0;
    std::vector<std::size_t> failing; // indices n with sigma_n not iso
};
StabilizationReport check_stabilization(const GradedSequence& seq, std::size_t window = 1);

// Generating set over Z[sigma] from a stabilization point: basis lifts of
// A_0..A_N, greedily trimmed, then validated by an exact span test in every
// degree.  When `at` is absent the stabilization point is computed; calling
// on an unstable sequence is an error.
struct WitnessReport {
    bool valid = false;
    std::vector<std::pair<std::size_t, std::size_t>> generators; // (degree, count)
    std::size_t total_generators = 0;
    std::optional<std::size_t> failure_degree; // first degree not spanned
};
WitnessReport fg_witness_from_stability(const GradedSequence& seq, std::optional<std::size_t> at = std::nullopt);

// coker(sigma_n) for n = 0..length-2, exact.
std::vector<FgAbGroup> cokernel_profile(const GradedSequence& seq);

// The sequence as a one-operator graded module (for the finite-generation
// checker).
GradedModule sequence_as_module(const GradedSequence& seq);

} // namespace equistab
