#pragma once

#include <span>

#include "tvadom/common/types.hpp"

namespace tvadom::adom {

/// Per-node access to the conjugates of gamma-strongly convex primals f_i.
///
/// gradient() must be safe to call concurrently for distinct nodes.
class DualOracle {
 public:
  virtual ~DualOracle() = default;

  virtual int nodes() const = 0;
  virtual int dim() const = 0;
  /// Strong-convexity modulus gamma of every f_i.
  virtual double strong_convexity() const = 0;

  /// out = grad f_i^*(z)
  virtual void gradient(int node, std::span<const double> z, std::span<double> out) const = 0;
  /// f_i^*(z)
  virtual double value(int node, std::span<const double> z) const = 0;
};

/// Primal convex function with a proximal operator, one per node.
class ConvexPrimal {
 public:
  virtual ~ConvexPrimal() = default;

  virtual int nodes() const = 0;
  virtual int dim() const = 0;
  virtual double value(int node, std::span<const double> x) const = 0;
  /// out = argmin_y f_i(y) + |y - v|^2 / (2 step)
  virtual void prox(int node, std::span<const double> v, double step, std::span<double> out) const = 0;
};

/// Moreau envelope inf_y f_i(y) + |y - x|^2 / (2 r), evaluated at the prox point.
double moreau_envelope(const ConvexPrimal& f, int node, std::span<const double> x, double r);

/// A full-stack gradient map (R^d)^m -> (R^d)^m consumed by the solver.
class StackedGradient {
 public:
  virtual ~StackedGradient() = default;

  virtual int nodes() const = 0;
  virtual int dim() const = 0;
  virtual void evaluate(const NodeStack& z, NodeStack& out) const = 0;
  virtual double value(const NodeStack& z) const = 0;
};

/// grad H*(Z) with rows grad f_i^*(z_i) + r z_i: the gradient of the conjugate
/// of the Moreau-smoothed primals, f_i^* + (r/2)|.|^2.
class SmoothedOracle final : public StackedGradient {
 public:
  SmoothedOracle(const DualOracle& base, double r, int threads = 1);

  int nodes() const override { return base_->nodes(); }
  int dim() const override { return base_->dim(); }
  double r() const { return r_; }
  const DualOracle& base() const { return *base_; }

  void evaluate(const NodeStack& z, NodeStack& out) const override;
  double value(const NodeStack& z) const override;

 private:
  const DualOracle* base_;
  double r_;
  int threads_;
};

inline SmoothedOracle smoothed_oracle(const DualOracle& base, double r, int threads = 1) {
  return SmoothedOracle(base, r, threads);
}

/// Rows grad h_i^*(z_i) of an oracle used as-is; drives the baseline method
/// on problems that are already smooth and strongly convex.
class PlainStackedOracle final : public StackedGradient {
 public:
  explicit PlainStackedOracle(const DualOracle& base, int threads = 1)
      : base_(&base), threads_(threads) {}

  int nodes() const override { return base_->nodes(); }
  int dim() const override { return base_->dim(); }
  void evaluate(const NodeStack& z, NodeStack& out) const override;
  double value(const NodeStack& z) const override;

 private:
  const DualOracle* base_;
  int threads_;
};

/// Conjugate oracle of f_i + (gamma/2)|x|^2 for a merely convex primal:
/// grad = prox_{f_i/gamma}(z/gamma).
class RegularizedOracle final : public DualOracle {
 public:
  RegularizedOracle(const ConvexPrimal& primal, double gamma);

  int nodes() const override { return primal_->nodes(); }
  int dim() const override { return primal_->dim(); }
  double strong_convexity() const override { return gamma_; }
  void gradient(int node, std::span<const double> z, std::span<double> out) const override;
  double value(int node, std::span<const double> z) const override;

 private:
  const ConvexPrimal* primal_;
  double gamma_;
};

/// Regularization with gamma = sqrt(eps) for an eps-accurate solution of a
/// convex (not strongly convex) problem.
RegularizedOracle regularize_for_accuracy(const ConvexPrimal& primal, double eps);

}  // namespace tvadom::adom
