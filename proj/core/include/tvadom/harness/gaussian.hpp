#pragma once

#include <cstdint>
#include <vector>

#include "tvadom/common/types.hpp"
#include "tvadom/entot/cost.hpp"
#include "tvadom/entot/histogram.hpp"

namespace tvadom::harness {

/// d equally spaced points on [lo, hi].
struct Grid {
  double lo = 0.0;
  double hi = 1.0;
  int size = 100;

  Vector points() const;
  bool operator==(const Grid&) const = default;
};

struct GaussianSpec {
  double mean = 0.5;
  double std = 0.1;
  Grid grid;
};

/// exp(-(t - mean)^2 / (2 std^2)) on the grid, normalized, then delta-floored
/// (no floor when delta == 0).
entot::Histogram gen_truncated_gaussian(const GaussianSpec& spec, double delta = 0.0);

/// Gaussian with the average mean and the average std of the specs, which
/// must share one grid.
entot::Histogram analytic_barycenter(const std::vector<GaussianSpec>& specs, double delta = 0.0);

struct GaussianDatasetOptions {
  int nodes = 10;
  Grid grid;
  double mean_lo = 0.35;
  double mean_hi = 0.65;
  double std_lo = 0.15;
  double std_hi = 0.2;
  double delta = 1e-6;
  std::uint64_t seed = 0;
};

struct GaussianDataset {
  std::vector<GaussianSpec> specs;
  std::vector<entot::Histogram> measures;
  entot::CostMatrix cost;
  /// Unfloored analytic barycenter.
  entot::Histogram barycenter;
};

/// Draws means and stds uniformly from the option ranges and builds the
/// normalized squared-Euclidean cost on the grid.
GaussianDataset make_gaussian_dataset(const GaussianDatasetOptions& options);

}  // namespace tvadom::harness
