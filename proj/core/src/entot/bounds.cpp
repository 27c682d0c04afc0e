#include "tvadom/entot/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tvadom/common/errors.hpp"

namespace tvadom::entot {

double k_bound(const CostMatrix& cost, double gamma, double delta, std::optional<double> rho) {
  const int d = cost.size();
  if (!(gamma > 0.0)) throw InvalidArgument("k_bound: gamma must be positive");
  if (!(delta > 0.0) || delta > 1.0 / d)
    throw InvalidArgument("k_bound: delta must lie in (0, 1/d], got " + std::to_string(delta));
  const double rho_value = rho.value_or(delta / 2.0);
  if (!(rho_value > 0.0) || !(rho_value < 1.0))
    throw InvalidArgument("k_bound: rho must lie in (0, 1), got " + std::to_string(rho_value));

  const Matrix& m = cost.entries();
  const double base = 2.0 * gamma * std::log(static_cast<double>(d)) - gamma * std::log(rho_value);
  double total = 0.0;
  for (int j = 0; j < d; ++j) {
    double spread = std::numeric_limits<double>::infinity();
    for (int i = 0; i < d; ++i) {
      if (i == j) continue;
      spread = std::min(spread, (m.col(j) - m.col(i)).cwiseAbs().maxCoeff());
    }
    const double term = base + spread;
    total += term * term;
  }
  return total;
}

EpsParams params_for_eps(double eps, int nodes, const CostMatrix& cost, double delta) {
  if (!(eps > 0.0)) throw InvalidArgument("params_for_eps: eps must be positive");
  if (nodes < 1) throw InvalidArgument("params_for_eps: nodes must be >= 1");
  const int d = cost.size();
  if (d < 2) throw InvalidArgument("params_for_eps: d must be >= 2");
  EpsParams out;
  out.gamma = eps / (8.0 * std::log(static_cast<double>(d)));
  out.k_squared = k_bound(cost, out.gamma, delta);
  out.r = eps / (4.0 * nodes * out.k_squared);
  return out;
}

double barycenter_value_floor(double gamma, double r, int nodes, int d, double k_squared) {
  return 2.0 * gamma * std::log(static_cast<double>(d)) + r * nodes * k_squared / (4.0 * (1.0 + r * gamma));
}

}  // namespace tvadom::entot
