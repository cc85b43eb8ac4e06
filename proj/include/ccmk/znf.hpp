#pragma once

// Exact integer linear algebra: Smith normal form with transforms, kernels,
// cokernel invariants. Everything is arbitrary precision (mpz_class).

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace ccmk::znf {

using Integer = mpz_class;
using IntegerVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers. Empty shapes
/// (0 rows or 0 columns) are legal.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_columns(std::size_t rows,
                                      const std::vector<IntegerVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    IntegerVector column(std::size_t c) const;
    IntegerVector row(std::size_t r) const;
    IntegerMatrix transpose() const;
    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t r);

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend IntegerVector operator*(const IntegerMatrix& a, const IntegerVector& v);
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

struct SmithDecomposition {
    IntegerMatrix U;  // rows x rows, unimodular
    IntegerMatrix D;  // rows x cols, diagonal
    IntegerMatrix V;  // cols x cols, unimodular
    /// Nonzero invariant factors d_1 | d_2 | ... | d_r, all positive.
    IntegerVector diagonal;

    std::size_t rank() const { return diagonal.size(); }
};

/// U*A*V = D with D in Smith form. Pivot choice: smallest nonzero absolute
/// value in the active block, ties broken by (row, col) order, so the
/// transforms are reproducible run to run.
SmithDecomposition smith_normal_form(const IntegerMatrix& a);

std::size_t rank(const IntegerMatrix& a);

/// Basis of {v in Z^cols : A v = 0}; size cols - rank(A).
std::vector<IntegerVector> kernel_basis(const IntegerMatrix& a);

struct CokernelInvariants {
    std::size_t free_rank = 0;
    IntegerVector torsion;  // entries >= 2, divisibility order

    friend bool operator==(const CokernelInvariants&, const CokernelInvariants&) = default;
};

/// Structure of Z^rows / A Z^cols.
CokernelInvariants cokernel_invariants(const IntegerMatrix& a);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntegerMatrix& a);

}  // namespace ccmk::znf
