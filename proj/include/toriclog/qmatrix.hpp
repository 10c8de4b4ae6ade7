/*
 * Dense rational linear algebra: reduction to reduced row echelon form and the
 * standard consumers (rank, right kernel, one solution, span membership). All
 * arithmetic exact; pivot choice is the first nonzero entry top down, so
 * results are deterministic.
 */
#pragma once

#include "toriclog/numeric.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace toriclog {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<std::size_t> row_reduce(QMat& m);

std::size_t q_rank(QMat m);

// Basis of { x : m x = 0 }; each vector has a 1 in its free column.
QMat q_nullspace(QMat m);

// One exact solution of a x = b, if the system is consistent.
std::optional<QVec> q_solve(const QMat& a, const QVec& b);

// Is v a linear combination of the given row vectors?
bool q_in_span(const QMat& rows, const QVec& v);

}  // namespace toriclog
