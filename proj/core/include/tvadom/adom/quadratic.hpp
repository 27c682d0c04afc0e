#pragma once

#include "tvadom/adom/oracle.hpp"

namespace tvadom::adom {

/// f_i(x) = (gamma/2)|x - c_i|^2 on R^d. Conjugate, gradient, prox and Moreau
/// envelope all have closed forms, which makes it the reference objective
/// for solver tests.
class QuadraticObjective final : public DualOracle {
 public:
  /// centers: m x d, row i = c_i.
  QuadraticObjective(NodeStack centers, double gamma);

  int nodes() const override { return static_cast<int>(centers_.rows()); }
  int dim() const override { return static_cast<int>(centers_.cols()); }
  double strong_convexity() const override { return gamma_; }
  const NodeStack& centers() const { return centers_; }

  // conjugate side: f*(z) = <z, c> + |z|^2 / (2 gamma)
  void gradient(int node, std::span<const double> z, std::span<double> out) const override;
  double value(int node, std::span<const double> z) const override;

  // primal side
  double primal_value(int node, std::span<const double> x) const;
  void primal_gradient(int node, std::span<const double> x, std::span<double> out) const;
  /// argmin_y f_i(y) + |y - v|^2 / (2 step)
  void prox(int node, std::span<const double> v, double step, std::span<double> out) const;

  /// gamma |x - c|^2 / (2 (1 + r gamma))
  double closed_form_envelope(int node, std::span<const double> x, double r) const;

  /// Minimizer of sum_i f_i over R^d: the mean of the centers.
  Vector minimizer() const { return centers_.colwise().mean().transpose(); }

 private:
  NodeStack centers_;
  double gamma_;
};

/// Primal view of a QuadraticObjective.
class QuadraticPrimal final : public ConvexPrimal {
 public:
  explicit QuadraticPrimal(const QuadraticObjective& q) : q_(&q) {}
  int nodes() const override { return q_->nodes(); }
  int dim() const override { return q_->dim(); }
  double value(int node, std::span<const double> x) const override { return q_->primal_value(node, x); }
  void prox(int node, std::span<const double> v, double step, std::span<double> out) const override {
    q_->prox(node, v, step, out);
  }

 private:
  const QuadraticObjective* q_;
};

/// f_i(x) = |x - c_i|_1: convex, not strongly convex; prox is soft
/// thresholding. The consensus minimizer is the coordinatewise median.
class AbsoluteDeviation final : public ConvexPrimal {
 public:
  explicit AbsoluteDeviation(NodeStack centers) : centers_(std::move(centers)) {}

  int nodes() const override { return static_cast<int>(centers_.rows()); }
  int dim() const override { return static_cast<int>(centers_.cols()); }
  double value(int node, std::span<const double> x) const override;
  void prox(int node, std::span<const double> v, double step, std::span<double> out) const override;

 private:
  NodeStack centers_;
};

}  // namespace tvadom::adom
