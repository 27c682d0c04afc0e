#pragma once

#include <cstdint>

#include "tvadom/common/rng.hpp"
#include "tvadom/entot/cost.hpp"
#include "tvadom/entot/histogram.hpp"

namespace tvadom::testkit {

/// Normalized histogram with entries drawn from [lo, 1].
inline entot::Histogram random_histogram(Rng& rng, int d, double lo = 0.05) {
  Vector w(d);
  for (int i = 0; i < d; ++i) w[i] = rng.uniform(lo, 1.0);
  return entot::Histogram::normalized(w);
}

/// Normalized squared-Euclidean cost of d random points in the unit square.
inline entot::CostMatrix random_cost(Rng& rng, int d) {
  Matrix pts(d, 2);
  for (int i = 0; i < d; ++i) pts.row(i) << rng.uniform(), rng.uniform();
  return entot::cost_matrix(pts, true);
}

inline Vector random_vector(Rng& rng, int d, double scale = 1.0) {
  Vector z(d);
  for (int i = 0; i < d; ++i) z[i] = rng.uniform(-scale, scale);
  return z;
}

inline double relative_error(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace tvadom::testkit
