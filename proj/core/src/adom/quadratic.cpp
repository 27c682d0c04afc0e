#include "tvadom/adom/quadratic.hpp"

#include <algorithm>
#include <cmath>

#include "tvadom/common/errors.hpp"

namespace tvadom::adom {

QuadraticObjective::QuadraticObjective(NodeStack centers, double gamma)
    : centers_(std::move(centers)), gamma_(gamma) {
  if (!(gamma > 0.0)) throw InvalidArgument("quadratic objective: gamma must be positive");
  if (centers_.rows() < 1 || centers_.cols() < 1) throw InvalidArgument("quadratic objective: empty centers");
}

void QuadraticObjective::gradient(int node, std::span<const double> z, std::span<double> out) const {
  for (std::size_t k = 0; k < z.size(); ++k)
    out[k] = centers_(node, static_cast<Eigen::Index>(k)) + z[k] / gamma_;
}

double QuadraticObjective::value(int node, std::span<const double> z) const {
  double inner = 0.0, sq = 0.0;
  for (std::size_t k = 0; k < z.size(); ++k) {
    inner += z[k] * centers_(node, static_cast<Eigen::Index>(k));
    sq += z[k] * z[k];
  }
  return inner + sq / (2.0 * gamma_);
}

double QuadraticObjective::primal_value(int node, std::span<const double> x) const {
  double sq = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double dk = x[k] - centers_(node, static_cast<Eigen::Index>(k));
    sq += dk * dk;
  }
  return 0.5 * gamma_ * sq;
}

void QuadraticObjective::primal_gradient(int node, std::span<const double> x, std::span<double> out) const {
  for (std::size_t k = 0; k < x.size(); ++k)
    out[k] = gamma_ * (x[k] - centers_(node, static_cast<Eigen::Index>(k)));
}

void QuadraticObjective::prox(int node, std::span<const double> v, double step, std::span<double> out) const {
  const double s = step * gamma_;
  for (std::size_t k = 0; k < v.size(); ++k)
    out[k] = (v[k] + s * centers_(node, static_cast<Eigen::Index>(k))) / (1.0 + s);
}

double QuadraticObjective::closed_form_envelope(int node, std::span<const double> x, double r) const {
  return primal_value(node, x) / (1.0 + r * gamma_);
}

double AbsoluteDeviation::value(int node, std::span<const double> x) const {
  double total = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k)
    total += std::abs(x[k] - centers_(node, static_cast<Eigen::Index>(k)));
  return total;
}

void AbsoluteDeviation::prox(int node, std::span<const double> v, double step, std::span<double> out) const {
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double c = centers_(node, static_cast<Eigen::Index>(k));
    const double u = v[k] - c;
    out[k] = c + std::copysign(std::max(std::abs(u) - step, 0.0), u);
  }
}

}  // namespace tvadom::adom
