#pragma once

#include <optional>

#include "tvadom/common/types.hpp"

namespace tvadom::entot {

/// Ground cost between d support points: symmetric, zero diagonal, nonnegative.
class CostMatrix {
 public:
  /// Validates the invariants; near-symmetric input (relative asymmetry
  /// below 1e-12) is symmetrized exactly.
  explicit CostMatrix(Matrix entries, std::optional<Matrix> support = std::nullopt);

  int size() const { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }
  double operator()(int i, int j) const { return entries_(i, j); }
  /// d x k matrix of the ground points when known.
  const std::optional<Matrix>& support() const { return support_; }

 private:
  Matrix entries_;
  std::optional<Matrix> support_;
};

/// Squared Euclidean costs between the rows of `points` (d x k). With
/// `normalize`, all entries are divided by the largest one.
CostMatrix cost_matrix(const Matrix& points, bool normalize);

/// Points of a rows x cols pixel grid in row-major order, as a (rows*cols) x 2
/// matrix of (row, col) coordinates.
Matrix pixel_grid(int rows, int cols);

}  // namespace tvadom::entot
