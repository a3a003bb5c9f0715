#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "frobkit/matrix.hpp"

namespace frobkit {

struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  Matrix reduced;
};

/// Reduced row echelon form. Exact; pivots are chosen left to right.
RrefResult rref(const Matrix& m);

/// Row reduction that only places pivots in columns [0, pivot_limit). Columns
/// past the limit are carried along (an augmented block).
RrefResult rref_limited(const Matrix& m, std::size_t pivot_limit);

std::size_t rank(const Matrix& m);

/// Columns form a basis of {x : m x = 0}; column count is cols - rank.
Matrix kernel_basis(const Matrix& m);

/// Some X with m X = b, or nullopt if any column of b is inconsistent.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Indices of a maximal linearly independent set of columns (greedy, left to right).
std::vector<std::size_t> independent_columns(const Matrix& m);

/// Columns of m that are independent; spans the column space.
Matrix column_basis(const Matrix& m);

/// Indices j of columns of `extra` such that span(base) + span(extra[j...]) is a
/// direct sum extension reaching span(base) + span(extra).
std::vector<std::size_t> complement_columns(const Matrix& base, const Matrix& extra);

}  // namespace frobkit
