#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

namespace equistab {

// All matrix arithmetic in the workbench is exact.  cpp_int keeps the
// Smith reduction safe from coefficient growth on desk-scale inputs.
using Int = boost::multiprecision::cpp_int;

Int gcd_int(Int a, Int b);
Int lcm_int(const Int& a, const Int& b);

// Dense row-major integer matrix.  Degenerate shapes (0 x n, n x 0) are
// valid and show up constantly as empty chain groups and zero modules.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMat identity(std::size_t n);
    static IntMat zero(std::size_t rows, std::size_t cols) { return IntMat(rows, cols); }
    static IntMat from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Int> col(std::size_t j) const;
    std::vector<Int> row(std::size_t i) const;
    void set_col(std::size_t j, const std::vector<Int>& v);

    IntMat operator*(const IntMat& rhs) const;
    std::vector<Int> operator*(const std::vector<Int>& v) const;
    IntMat operator+(const IntMat& rhs) const;
    IntMat operator-(const IntMat& rhs) const;
    IntMat operator-() const;
    bool operator==(const IntMat& rhs) const = default;

    IntMat transposed() const;
    bool is_zero() const;
    bool is_identity() const;

    // [this | rhs] side by side; row counts must match.
    IntMat hstack(const IntMat& rhs) const;
    // this on top of rhs; column counts must match.
    IntMat vstack(const IntMat& rhs) const;

    IntMat submatrix(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;

    // elementary row/column operations (used by the Smith reduction)
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

} // namespace equistab
