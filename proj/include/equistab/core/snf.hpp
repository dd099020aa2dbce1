#pragma once

#include "equistab/core/intmat.hpp"

#include <optional>
#include <vector>

namespace equistab {

// u * a * v == s with u, v unimodular and s diagonal, s_1 | s_2 | ... >= 0.
// uinv and vinv are maintained alongside so callers never have to invert.
struct SmithResult {
    IntMat s;
    IntMat u, uinv;
    IntMat v, vinv;
    std::vector<Int> invariants; // positive diagonal entries, divisor chain

    std::size_t rank() const { return invariants.size(); }
};

SmithResult smith_normal_form(const IntMat& a);

// One integer solution of a x = b, if any.
std::optional<std::vector<Int>> solve_linear(const IntMat& a, const std::vector<Int>& b);

// Columnwise solve: returns x with a x = b, if every column is solvable.
std::optional<IntMat> solve_linear(const IntMat& a, const IntMat& b);

// Columns form a basis of the (saturated) integer kernel lattice of a.
IntMat kernel_basis(const IntMat& a);

// Is v in the column span of gens over Z?
bool lattice_contains(const IntMat& gens, const std::vector<Int>& v);

// Are the two column lattices equal as subgroups of Z^n?
bool lattices_equal(const IntMat& a, const IntMat& b);

// Invariants of Z^ambient_rank / colspan(a): torsion factors (> 1) followed
// by free rank, both in the returned pair.
struct CokernelShape {
    std::vector<Int> torsion;
    std::size_t free_rank = 0;
    bool is_trivial() const { return torsion.empty() && free_rank == 0; }
};
CokernelShape cokernel_shape(const IntMat& a);

} // namespace equistab
