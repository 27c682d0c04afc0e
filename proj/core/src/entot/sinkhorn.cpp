#include "tvadom/entot/sinkhorn.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "tvadom/common/errors.hpp"

namespace tvadom::entot {
namespace {

// out_i = gamma * LSE_j((pot_j - M_ji) / gamma); M symmetric so column i of M
// serves as row i.
void soft_min(const Matrix& cost, const Eigen::ArrayXd& pot, double gamma, Eigen::ArrayXd& out) {
  const auto d = cost.rows();
  Eigen::ArrayXd a(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    a = (pot - cost.col(i).array()) / gamma;
    const double top = a.maxCoeff();
    out[i] = gamma * (top + std::log((a - top).exp().sum()));
  }
}

}  // namespace

SinkhornResult sinkhorn(const Histogram& p, const Histogram& q, const CostMatrix& cost, double gamma,
                        const SinkhornOptions& options) {
  if (!(gamma > 0.0)) throw InvalidArgument("sinkhorn: gamma must be positive");
  if (p.size() != cost.size() || q.size() != cost.size()) throw InvalidArgument("sinkhorn: size mismatch");
  if (!(p.min() > 0.0) || !(q.min() > 0.0)) throw InvalidArgument("sinkhorn: marginals must be strictly positive");
  if (options.max_iter < 1 || !(options.tol > 0.0)) throw InvalidArgument("sinkhorn: invalid options");

  const Matrix& m = cost.entries();
  const auto d = m.rows();
  const Eigen::ArrayXd log_p = p.mass().array().log();
  const Eigen::ArrayXd log_q = q.mass().array().log();

  Eigen::ArrayXd f = Eigen::ArrayXd::Zero(d);
  Eigen::ArrayXd g = Eigen::ArrayXd::Zero(d);
  Eigen::ArrayXd lse(d);

  Eigen::ArrayXd best_f = f, best_g = g;
  double best_residual = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;

  for (int it = 0; it < options.max_iter; ++it) {
    // row pass: lse_i = gamma LSE_j((g_j - M_ij)/gamma); row sums of the
    // current plan are exp((f_i + lse_i)/gamma), columns are exact after a
    // column pass.
    soft_min(m, g, gamma, lse);
    if (it > 0) {
      const double residual = (((f + lse) / gamma).exp() - p.mass().array()).abs().sum();
      if (residual < best_residual) {
        best_residual = residual;
        best_f = f;
        best_g = g;
      }
      if (residual <= options.tol) {
        converged = true;
        break;
      }
    }
    f = gamma * log_p - lse;
    soft_min(m, f, gamma, lse);
    g = gamma * log_q - lse;
    iterations = it + 1;
  }
  if (!converged && std::isfinite(best_residual)) {
    f = best_f;
    g = best_g;
  }

  SinkhornResult out;
  Matrix log_x(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    log_x.col(j) = ((f + g[j] - m.col(j).array()) / gamma).matrix();
  out.plan.entries = log_x.array().exp().matrix();
  const Matrix& x = out.plan.entries;
  out.transport_cost = (m.array() * x.array()).sum();
  out.value = out.transport_cost + gamma * (x.array() * log_x.array()).sum();
  out.f = f.matrix();
  out.g = g.matrix();
  out.converged = converged;
  out.iterations = iterations;
  out.residual = (out.plan.row_sums() - p.mass()).lpNorm<1>() + (out.plan.col_sums() - q.mass()).lpNorm<1>();
  return out;
}

}  // namespace tvadom::entot
