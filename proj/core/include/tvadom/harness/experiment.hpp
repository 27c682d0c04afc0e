#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tvadom/adom/params.hpp"
#include "tvadom/entot/histogram.hpp"
#include "tvadom/harness/config.hpp"

namespace tvadom::harness {

/// One CSV line. For Gaussian datasets objective_gap is
///   (1/m) (sum_i W(q_i, x_i) - sum_i W(q_i, p*))
/// with exact transport costs and x_i the simplex projection of node i's
/// output. MNIST runs have no p*, so the column holds (1/m) sum_i W(q_i, x_i).
struct MetricsRow {
  long iteration = 0;
  double objective_gap = 0.0;
  double consensus = 0.0;
  double wall_time = 0.0;
};

inline constexpr const char* kCsvHeader = "iteration,objective_gap,consensus,wall_time";

/// Writes one row; reals use the shortest round-trip representation.
void write_csv_row(std::ostream& out, const MetricsRow& row);

struct ExperimentResult {
  ExperimentConfig config;
  adom::Params params;
  std::vector<MetricsRow> rows;
  /// Simplex projections of the final node outputs, m x d.
  NodeStack final_histograms;
  /// p* for Gaussian datasets.
  std::optional<entot::Histogram> reference;
  /// "objective_gap" or "mean_objective".
  std::string objective_column;
};

/// Builds the dataset, schedule, spectral bounds, parameters and oracle,
/// runs the solver and evaluates metrics at recorded iterations. With a
/// non-empty cfg.output, writes metrics.csv (row by row, so a diverged run
/// keeps its prefix), manifest.json and histograms.csv into that directory.
/// Solver divergence propagates as adom::RunAborted.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Runs independent configurations on up to `workers` threads. Results are
/// in input order.
std::vector<ExperimentResult> run_sweep(const std::vector<ExperimentConfig>& configs, int workers);

/// git describe of the build.
std::string build_version();

}  // namespace tvadom::harness
