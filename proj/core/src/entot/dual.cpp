#include "tvadom/entot/dual.hpp"

#include <cmath>
#include <string>

#include "tvadom/common/errors.hpp"

namespace tvadom::entot {
namespace {

void check_inputs(const Histogram& q, const CostMatrix& cost, double gamma, const Vector& z) {
  if (!(gamma > 0.0)) throw InvalidArgument("dual oracle: gamma must be positive, got " + std::to_string(gamma));
  if (q.size() != cost.size() || z.size() != cost.size())
    throw InvalidArgument("dual oracle: size mismatch (q " + std::to_string(q.size()) + ", cost " +
                          std::to_string(cost.size()) + ", z " + std::to_string(z.size()) + ")");
  if (!(q.min() > 0.0)) throw InvalidArgument("dual oracle: q must be strictly positive (floor it first)");
  if (!z.allFinite()) throw InvalidArgument("dual oracle: non-finite z");
}

}  // namespace

namespace detail {

void dual_grad_into(const Vector& q, const Matrix& cost, double gamma, std::span<const double> z,
                    std::span<double> out) {
  const auto d = cost.rows();
  const Eigen::Map<const Eigen::ArrayXd> zs(z.data(), d);
  Eigen::Map<Eigen::ArrayXd> acc(out.data(), d);
  acc.setZero();
  Eigen::ArrayXd a(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    a = (zs - cost.col(j).array()) / gamma;
    a = (a - a.maxCoeff()).exp();
    acc += (q[j] / a.sum()) * a;
  }
}

double dual_value_unchecked(const Vector& q, const Matrix& cost, double gamma, std::span<const double> z) {
  const auto d = cost.rows();
  const Eigen::Map<const Eigen::ArrayXd> zs(z.data(), d);
  Eigen::ArrayXd a(d);
  double total = 0.0;
  for (Eigen::Index j = 0; j < d; ++j) {
    a = (zs - cost.col(j).array()) / gamma;
    const double top = a.maxCoeff();
    total += q[j] * (top + std::log((a - top).exp().sum()));
  }
  return gamma * (total - (q.array() * q.array().log()).sum());
}

}  // namespace detail

double dual_value(const Histogram& q, const CostMatrix& cost, double gamma, const Vector& z) {
  check_inputs(q, cost, gamma, z);
  return detail::dual_value_unchecked(q.mass(), cost.entries(), gamma, {z.data(), static_cast<std::size_t>(z.size())});
}

Histogram dual_grad(const Histogram& q, const CostMatrix& cost, double gamma, const Vector& z) {
  check_inputs(q, cost, gamma, z);
  Vector out(z.size());
  detail::dual_grad_into(q.mass(), cost.entries(), gamma, {z.data(), static_cast<std::size_t>(z.size())},
                         {out.data(), static_cast<std::size_t>(out.size())});
  return Histogram(std::move(out));
}

}  // namespace tvadom::entot
