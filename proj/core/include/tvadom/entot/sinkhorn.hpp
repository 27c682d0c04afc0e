#pragma once

#include "tvadom/entot/cost.hpp"
#include "tvadom/entot/histogram.hpp"

namespace tvadom::entot {

/// Coupling X with row sums p and column sums q.
struct TransportPlan {
  Matrix entries;

  Vector row_sums() const { return entries.rowwise().sum(); }
  Vector col_sums() const { return entries.colwise().sum().transpose(); }
};

struct SinkhornOptions {
  /// l1 tolerance on both marginals.
  double tol = 1e-9;
  int max_iter = 10000;
};

struct SinkhornResult {
  /// <M, X> + gamma sum X ln X
  double value = 0.0;
  /// <M, X>
  double transport_cost = 0.0;
  TransportPlan plan;
  /// Dual potentials: X_ij = exp((f_i + g_j - M_ij) / gamma).
  Vector f;
  Vector g;
  bool converged = false;
  int iterations = 0;
  /// l1 marginal residual of the returned plan.
  double residual = 0.0;
};

/// Entropic transport min_{X in U(p,q)} <M,X> + gamma sum X ln X by
/// alternating marginal scaling in the log domain. When max_iter runs out
/// the iterate with the smallest residual is returned with converged=false.
SinkhornResult sinkhorn(const Histogram& p, const Histogram& q, const CostMatrix& cost, double gamma,
                        const SinkhornOptions& options = {});

}  // namespace tvadom::entot
