#pragma once

#include "equistab/core/abelian.hpp"

#include <optional>
#include <string>
#include <vector>

namespace equistab {

// A module over a polynomial operator family, graded by an abstract finite
// set of grades (G-set classes, or plain integers).  Each operator moves
// every grade by a fixed degree shift; edges record where each grade is
// sent and by which matrix.
struct GradedModule {
    std::vector<std::string> grade_names;
    std::vector<std::int64_t> grade_degree; // cardinality / integer degree
    std::vector<BasedGroup> pieces;

    struct Edge {
        std::size_t op = 0;
        std::size_t src = 0;
        std::size_t dst = 0;
        IntMat f;
    };
    std::vector<Edge> edges;
    std::vector<std::string> op_names;
    std::vector<std::int64_t> op_shift;

    std::int64_t max_degree() const;
    const Edge* edge_for(std::size_t op, std::size_t src) const;
};

// Checks that all operator squares commute (both composites into every
// reachable grade agree).  Throws ValidationError on failure.
void validate_commuting(const GradedModule& m);

// Exact per-grade cokernel finite-generation check: a SEMI-decision.
// Verdict is positive when every grade whose degree lies in the top window
// (degree > bound - window) has vanishing cokernel; the generators are then
// basis lifts of the nonzero cokernels.  A negative verdict reports the
// persistence pattern.  `ops` restricts to a subring of the operator family
// (all operators when empty).
struct FgGradeInfo {
    std::size_t grade = 0;
    FgAbGroup cokernel;
};

struct FgReport {
    bool finitely_generated = false;
    std::int64_t bound = 0;
    std::int64_t window = 0;
    std::vector<FgGradeInfo> nonzero_cokernels; // generators when positive
    std::int64_t max_generator_degree = 0;      // meaningful when positive
    std::string pattern;                        // human-readable persistence summary
};

FgReport fg_check(const GradedModule& m, std::int64_t window = -1, const std::vector<std::size_t>* ops = nullptr);

// Describes repeating degree patterns in the nonzero-cokernel list, e.g.
// "every degree p, 2p, 3p, ..." so the instability mechanism is visible.
std::string describe_persistence(const GradedModule& m, const std::vector<FgGradeInfo>& bad);

} // namespace equistab
