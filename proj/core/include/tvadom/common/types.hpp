#pragma once

#include <Eigen/Dense>

namespace tvadom {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Element of (R^d)^m: row i is node i's d-vector.
using NodeStack = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace tvadom
