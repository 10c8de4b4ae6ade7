/*
 * Dense integer matrices and the lattice routines built on them: Smith normal
 * form with a fixed pivot rule, kernel bases, particular solutions of A x = b
 * over Z, and ranks/determinants by fraction-free elimination.
 *
 * Determinism contract: the SNF pivot is always the entry of smallest nonzero
 * absolute value, ties broken by lowest (row, col) in row-major order. All
 * derived bases (kernels, cokernel coordinates) inherit reproducibility from
 * that rule.
 */
#pragma once

#include "toriclog/numeric.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace toriclog {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Integer> row(std::size_t i) const;
    std::vector<Integer> col(std::size_t j) const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    std::vector<Integer> apply(const std::vector<Integer>& v) const;  // this * v
    bool operator==(const IntMatrix& rhs) const = default;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row i -= q * row j, and the column analogue
    void add_row_multiple(std::size_t i, std::size_t j, const Integer& q);
    void add_col_multiple(std::size_t i, std::size_t j, const Integer& q);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    bool is_zero() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> a_;
};

struct SmithDecomposition {
    IntMatrix u;  // unimodular, rows x rows
    IntMatrix s;  // diagonal, nonnegative, d1 | d2 | ..., zeros trailing
    IntMatrix v;  // unimodular, cols x cols
    std::size_t rank = 0;  // number of nonzero diagonal entries

    // invariant: u * a * v == s for the input a
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// Basis of { x in Z^cols : A x = 0 }, as the kernel columns of the SNF
// transform. The vectors are a lattice basis, not merely spanning.
std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& a);

// One integer solution of A x = b, if any exists.
std::optional<std::vector<Integer>> integer_solve(const IntMatrix& a,
                                                  const std::vector<Integer>& b);

std::size_t rank(const IntMatrix& a);

Integer determinant(const IntMatrix& a);  // square input

// Exact inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& u);

// Row-style Hermite normal form of the row lattice: echelon rows with positive
// pivots, entries above each pivot reduced into [0, pivot). Zero rows dropped.
IntMatrix hermite_row_basis(const IntMatrix& a);

}  // namespace toriclog
