#include "tvadom/entot/cost.hpp"

#include <algorithm>
#include <string>

#include "tvadom/common/errors.hpp"

namespace tvadom::entot {

CostMatrix::CostMatrix(Matrix entries, std::optional<Matrix> support)
    : entries_(std::move(entries)), support_(std::move(support)) {
  const auto d = entries_.rows();
  if (d < 2 || entries_.cols() != d)
    throw InvalidArgument("cost matrix: must be square with d >= 2, got " + std::to_string(d) + "x" +
                          std::to_string(entries_.cols()));
  if (!entries_.allFinite()) throw InvalidArgument("cost matrix: non-finite entry");
  if (entries_.minCoeff() < 0.0) throw InvalidArgument("cost matrix: negative entry");
  if (entries_.diagonal().cwiseAbs().maxCoeff() != 0.0) throw InvalidArgument("cost matrix: nonzero diagonal");
  const double scale = std::max(entries_.cwiseAbs().maxCoeff(), 1.0);
  if ((entries_ - entries_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw InvalidArgument("cost matrix: not symmetric");
  entries_ = 0.5 * (entries_ + entries_.transpose()).eval();
  if (support_ && support_->rows() != d)
    throw InvalidArgument("cost matrix: support has " + std::to_string(support_->rows()) + " points, expected " +
                          std::to_string(d));
}

CostMatrix cost_matrix(const Matrix& points, bool normalize) {
  const auto d = points.rows();
  if (d < 2) throw InvalidArgument("cost_matrix: need at least 2 points, got " + std::to_string(d));
  Matrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = (points.row(i) - points.row(j)).squaredNorm();
  if (normalize) {
    const double top = m.maxCoeff();
    if (!(top > 0.0)) throw InvalidArgument("cost_matrix: all points coincide, cannot normalize");
    m /= top;
  }
  return CostMatrix(std::move(m), points);
}

Matrix pixel_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InvalidArgument("pixel_grid: empty grid");
  Matrix pts(static_cast<Eigen::Index>(rows) * cols, 2);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      pts(r * cols + c, 0) = r;
      pts(r * cols + c, 1) = c;
    }
  return pts;
}

}  // namespace tvadom::entot
