#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gitfan/arith.hpp"

namespace gitfan::linalg {

using RatRow = std::vector<Rational>;

/// Reduced row echelon form over Q. Zero rows are dropped; `pivots` holds
/// the pivot column of each remaining row.
struct Echelon {
  std::vector<RatRow> rows;
  std::vector<std::size_t> pivots;
};

Echelon rref(std::span<const LatVec> rows, std::size_t ncols);
Echelon rref(std::vector<RatRow> rows, std::size_t ncols);

std::size_t rank(std::span<const LatVec> rows, std::size_t ncols);

/// Canonical integer basis of the row space: the RREF rows, each scaled to a
/// primitive vector (pivot entries positive).
std::vector<LatVec> row_space_basis(std::span<const LatVec> rows,
                                    std::size_t ncols);

/// Canonical integer basis of {x : <r, x> = 0 for all rows r}, one vector per
/// free column of the RREF, each primitive.
std::vector<LatVec> nullspace(std::span<const LatVec> rows, std::size_t ncols);

/// Orthogonal projection of v onto the orthogonal complement of span(basis),
/// scaled to a primitive integer vector.
LatVec project_out(const LatVec& v, std::span<const LatVec> basis);

/// Solves sum_i c_i * columns[i] = target. Returns nullopt when the system
/// is inconsistent. Columns must be linearly independent.
std::optional<std::vector<Rational>> solve_independent(
    std::span<const LatVec> columns, const LatVec& target);

}  // namespace gitfan::linalg
