#pragma once

#include <optional>

#include "tvadom/entot/cost.hpp"

namespace tvadom::entot {

/// Squared gradient bound of W_gamma(q, .) on {p : min p >= rho}:
///   K^2 = sum_j (2 gamma ln d + min_{i != j} max_l |M_jl - M_il| - gamma ln rho)^2
/// with rho = delta / 2 unless given. Requires delta in (0, 1/d] and
/// rho in (0, 1).
double k_bound(const CostMatrix& cost, double gamma, double delta, std::optional<double> rho = std::nullopt);

struct EpsParams {
  double gamma = 0.0;
  double r = 0.0;
  double k_squared = 0.0;
};

/// Accuracy-driven parameters: gamma = eps / (8 ln d) so the entropic gap
/// 2 gamma ln d equals eps/4, K^2 = k_bound(cost, gamma, delta), and
/// r = eps / (4 m K^2).
EpsParams params_for_eps(double eps, int nodes, const CostMatrix& cost, double delta);

/// Value floor of the barycenter guarantee, 2 gamma ln d + r m K^2 / (4 (1 + r gamma)).
double barycenter_value_floor(double gamma, double r, int nodes, int d, double k_squared);

}  // namespace tvadom::entot
