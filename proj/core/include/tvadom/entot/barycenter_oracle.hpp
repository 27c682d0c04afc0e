#pragma once

#include <vector>

#include "tvadom/adom/oracle.hpp"
#include "tvadom/entot/cost.hpp"
#include "tvadom/entot/histogram.hpp"

namespace tvadom::entot {

/// Dual oracle of the entropic barycenter problem: node i holds q_i and
/// answers grad W*_{gamma, q_i}(z). Outputs lie on the simplex.
class BarycenterOracle final : public adom::DualOracle {
 public:
  /// Every q_i must be strictly positive (floored) and match the cost size.
  BarycenterOracle(std::vector<Histogram> measures, CostMatrix cost, double gamma);

  int nodes() const override { return static_cast<int>(measures_.size()); }
  int dim() const override { return cost_.size(); }
  double strong_convexity() const override { return gamma_; }

  void gradient(int node, std::span<const double> z, std::span<double> out) const override;
  double value(int node, std::span<const double> z) const override;

  const std::vector<Histogram>& measures() const { return measures_; }
  const CostMatrix& cost() const { return cost_; }
  double gamma() const { return gamma_; }

 private:
  std::vector<Histogram> measures_;
  CostMatrix cost_;
  double gamma_;
};

inline BarycenterOracle wb_dual_oracle(std::vector<Histogram> measures, CostMatrix cost, double gamma) {
  return BarycenterOracle(std::move(measures), std::move(cost), gamma);
}

}  // namespace tvadom::entot
