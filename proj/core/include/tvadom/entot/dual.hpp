#pragma once

#include <span>

#include "tvadom/entot/cost.hpp"
#include "tvadom/entot/histogram.hpp"

namespace tvadom::entot {

/// Conjugate of p -> W_gamma(q, p) over the simplex:
///   W*(z) = -gamma <q, ln q> + gamma sum_j q_j ln sum_l exp((z_l - M_lj) / gamma).
/// Each inner log-sum-exp is shifted by its column maximum.
/// Requires gamma > 0 and strictly positive q.
double dual_value(const Histogram& q, const CostMatrix& cost, double gamma, const Vector& z);

/// Gradient of dual_value, a point of the simplex:
///   [grad]_l = sum_j q_j softmax_l((z - M_{.j}) / gamma).
Histogram dual_grad(const Histogram& q, const CostMatrix& cost, double gamma, const Vector& z);

namespace detail {

/// Unchecked kernel behind dual_grad; `out` and `z` have length d.
void dual_grad_into(const Vector& q, const Matrix& cost, double gamma, std::span<const double> z,
                    std::span<double> out);
double dual_value_unchecked(const Vector& q, const Matrix& cost, double gamma, std::span<const double> z);

}  // namespace detail
}  // namespace tvadom::entot
