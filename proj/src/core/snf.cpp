#include "equistab/core/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace equistab {

namespace {

// Pivot selection: smallest nonzero magnitude in the trailing block.
// Keeps intermediate entries small without fraction-free bookkeeping.
bool find_pivot(const IntMat& s, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            const Int& x = s(i, j);
            if (x == 0) continue;
            Int ax = x < 0 ? Int(-x) : x;
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SmithResult smith_normal_form(const IntMat& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SmithResult r;
    r.s = a;
    r.u = IntMat::identity(m);
    r.uinv = IntMat::identity(m);
    r.v = IntMat::identity(n);
    r.vinv = IntMat::identity(n);

    IntMat& s = r.s;

    auto row_op = [&](std::size_t dst, std::size_t src, const Int& c) {
        // row_dst += c * row_src on s and u; inverse column op on uinv
        s.add_row_multiple(dst, src, c);
        r.u.add_row_multiple(dst, src, c);
        r.uinv.add_col_multiple(src, dst, -c);
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const Int& c) {
        s.add_col_multiple(dst, src, c);
        r.v.add_col_multiple(dst, src, c);
        r.vinv.add_row_multiple(src, dst, -c);
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        s.swap_rows(i, j);
        r.u.swap_rows(i, j);
        r.uinv.swap_cols(i, j);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        s.swap_cols(i, j);
        r.v.swap_cols(i, j);
        r.vinv.swap_rows(i, j);
    };
    auto row_negate = [&](std::size_t i) {
        s.negate_row(i);
        r.u.negate_row(i);
        r.uinv.negate_col(i);
    };

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(s, t, pi, pj)) break;
        row_swap(t, pi);
        col_swap(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (s(i, t) == 0) continue;
                Int q = s(i, t) / s(t, t);
                row_op(i, t, -q);
                if (s(i, t) != 0) {
                    // remainder is strictly smaller; promote it to the pivot
                    row_swap(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s(t, j) == 0) continue;
                Int q = s(t, j) / s(t, t);
                col_op(j, t, -q);
                if (s(t, j) != 0) {
                    col_swap(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;

            // pivot divides the whole trailing block?  if not, fold the
            // offending row in and keep reducing
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        row_op(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (s(t, t) < 0) row_negate(t);
    }

    for (std::size_t t = 0; t < steps; ++t)
        if (s(t, t) != 0) r.invariants.push_back(s(t, t));
    return r;
}

std::optional<std::vector<Int>> solve_linear(const IntMat& a, const std::vector<Int>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: size mismatch");
    SmithResult snf = smith_normal_form(a);
    std::vector<Int> ub = snf.u * b;
    std::vector<Int> y(a.cols());
    const std::size_t rk = snf.rank();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < rk) {
            if (ub[i] % snf.invariants[i] != 0) return std::nullopt;
            y[i] = ub[i] / snf.invariants[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.v * y;
}

std::optional<IntMat> solve_linear(const IntMat& a, const IntMat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_linear: size mismatch");
    SmithResult snf = smith_normal_form(a);
    IntMat ub = snf.u * b;
    IntMat y(a.cols(), b.cols());
    const std::size_t rk = snf.rank();
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i < rk) {
                if (ub(i, j) % snf.invariants[i] != 0) return std::nullopt;
                if (i < y.rows()) y(i, j) = ub(i, j) / snf.invariants[i];
            } else if (ub(i, j) != 0) {
                return std::nullopt;
            }
        }
    }
    return snf.v * y;
}

IntMat kernel_basis(const IntMat& a) {
    SmithResult snf = smith_normal_form(a);
    const std::size_t rk = snf.rank();
    const std::size_t dim = a.cols() - rk;
    IntMat k(a.cols(), dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < a.cols(); ++i) k(i, j) = snf.v(i, rk + j);
    return k;
}

bool lattice_contains(const IntMat& gens, const std::vector<Int>& v) {
    return solve_linear(gens, v).has_value();
}

bool lattices_equal(const IntMat& a, const IntMat& b) {
    if (a.rows() != b.rows()) return false;
    return solve_linear(a, b).has_value() && solve_linear(b, a).has_value();
}

CokernelShape cokernel_shape(const IntMat& a) {
    SmithResult snf = smith_normal_form(a);
    CokernelShape c;
    for (const Int& s : snf.invariants)
        if (s > 1) c.torsion.push_back(s);
    c.free_rank = a.rows() - snf.rank();
    return c;
}

} // namespace equistab
