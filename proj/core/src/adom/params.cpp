#include "tvadom/adom/params.hpp"

#include <cmath>
#include <string>

#include "tvadom/common/errors.hpp"

namespace tvadom::adom {
namespace {

void check_bounds(const SpectralBounds& b) {
  if (!(b.lambda_min_plus > 0.0) || !(b.lambda_max >= b.lambda_min_plus))
    throw InvalidArgument("spectral bounds must satisfy 0 < lambda_min_plus <= lambda_max, got (" +
                          std::to_string(b.lambda_min_plus) + ", " + std::to_string(b.lambda_max) + ")");
}

void check_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw InvalidArgument(std::string(name) + " must be positive and finite, got " + std::to_string(v));
}

}  // namespace

Params derive_params(double r, double gamma, SpectralBounds bounds) {
  check_positive(r, "r");
  check_positive(gamma, "gamma");
  check_bounds(bounds);
  const double lmin = bounds.lambda_min_plus;
  const double lmax = bounds.lambda_max;
  const double rg1 = 1.0 + r * gamma;

  Params p;
  p.r = r;
  p.gamma = gamma;
  p.smoothness = 1.0 / r;
  p.strong_convexity = gamma / rg1;
  p.alpha = r / 2.0;
  p.eta = 2.0 * lmin * std::sqrt(gamma) / (7.0 * lmax * std::sqrt(r * rg1));
  p.theta = gamma / (lmax * rg1);
  p.sigma = 1.0 / lmax;
  p.tau = lmin / (7.0 * lmax) * std::sqrt(r * gamma / rg1);
  p.bounds = bounds;
  return p;
}

Params baseline_params(double smoothness, double strong_convexity, SpectralBounds bounds) {
  check_positive(smoothness, "smoothness");
  check_positive(strong_convexity, "strong_convexity");
  if (strong_convexity > smoothness)
    throw InvalidArgument("strong_convexity must not exceed smoothness");
  check_bounds(bounds);
  const double lmin = bounds.lambda_min_plus;
  const double lmax = bounds.lambda_max;

  Params p;
  p.smoothness = smoothness;
  p.strong_convexity = strong_convexity;
  p.alpha = 1.0 / (2.0 * smoothness);
  p.eta = 2.0 * lmin * std::sqrt(strong_convexity * smoothness) / (7.0 * lmax);
  p.theta = strong_convexity / lmax;
  p.sigma = 1.0 / lmax;
  p.tau = lmin / (7.0 * lmax) * std::sqrt(strong_convexity / smoothness);
  p.bounds = bounds;
  return p;
}

double value_constant(int nodes, double r, double gamma, double k, SpectralBounds bounds) {
  check_positive(r, "r");
  check_positive(gamma, "gamma");
  check_bounds(bounds);
  if (nodes < 1) throw InvalidArgument("value_constant: nodes must be >= 1");
  const double rg1 = 1.0 + r * gamma;
  const double m = nodes;
  return m * rg1 * k / (std::sqrt(2.0) * gamma) * std::sqrt(bounds.lambda_max / bounds.lambda_min_plus) +
         m * rg1 * rg1 / (4.0 * r * gamma * gamma);
}

long iteration_estimate(double eps, double r, double gamma, SpectralBounds bounds, double c2) {
  check_positive(eps, "eps");
  check_positive(r, "r");
  check_positive(gamma, "gamma");
  check_positive(c2, "C2");
  check_bounds(bounds);
  const double log_term = std::log(2.0 * c2 / eps);
  if (log_term <= 0.0) return 0;
  const double rg = r * gamma;
  const double n = 7.0 * bounds.lambda_max / bounds.lambda_min_plus * std::sqrt((1.0 + rg) / rg) * log_term;
  return static_cast<long>(std::ceil(n));
}

}  // namespace tvadom::adom
