#pragma once

#include <functional>
#include <vector>

#include "tvadom/adom/oracle.hpp"
#include "tvadom/adom/params.hpp"
#include "tvadom/common/errors.hpp"
#include "tvadom/netgraph/schedule.hpp"

namespace tvadom::adom {

/// Iterates of the dual method. z, z_f and z_g stay in the subspace
/// {sum_i z_i = 0}; `output` holds grad H*(z_g) of the last step.
struct State {
  NodeStack z;
  NodeStack z_f;
  NodeStack z_g;
  NodeStack momentum;
  NodeStack output;
  /// Number of steps taken.
  long iteration = 0;
};

/// Zero start: z = z_f = m = 0.
State initial_state(int nodes, int dim);

/// One synchronous round:
///   z_g = tau z + (1 - tau) z_f
///   D   = sigma W (m - eta G),           G = grad H*(z_g)
///   m   = m - eta G - D
///   z   = z + eta alpha (z_g - z) + D
///   z_f = z_g - theta W G
/// with exactly one stacked-oracle evaluation and two Laplacian products.
/// state.output receives G. Throws NumericalDivergence naming the first
/// non-finite iterate.
void adom_step(State& state, const netgraph::Laplacian& laplacian, const Params& params,
               const StackedGradient& gradient);

/// Baseline step on a plain (already smooth, strongly convex) oracle; the
/// update lines are identical, only the gradient map and the parameters
/// differ.
void baseline_adom_step(State& state, const netgraph::Laplacian& laplacian, const Params& params,
                        const DualOracle& oracle);

struct Record {
  long iteration = 0;
  /// x^n = grad H*(z_g^n); empty when RunOptions::keep_outputs is false.
  NodeStack output;
  double consensus = 0.0;
};

struct RunOptions {
  long n_iters = 1;
  /// Record iterations 0, k, 2k, ... and always the last one.
  long record_every = 1;
  bool keep_outputs = true;
  /// Workers for per-node oracle evaluation in the DualOracle overloads.
  int threads = 1;
};

struct Trajectory {
  std::vector<Record> records;
  State final_state;
  long oracle_evaluations = 0;
  long laplacian_products = 0;
};

/// Called for every record as soon as it is produced.
using RecordSink = std::function<void(const Record&, const State&)>;

/// Divergence during run(); carries everything recorded before the failure.
class RunAborted : public NumericalDivergence {
 public:
  RunAborted(const NumericalDivergence& cause, Trajectory partial)
      : NumericalDivergence(cause), partial_(std::move(partial)) {}
  const Trajectory& partial() const { return partial_; }

 private:
  Trajectory partial_;
};

/// Runs n_iters steps with W_n = schedule.laplacian(n). Laplacians are
/// rebuilt only when the schedule's epoch changes.
Trajectory run(const netgraph::NetworkSchedule& schedule, const StackedGradient& gradient, const Params& params,
               const RunOptions& options, const RecordSink& sink = {});

/// Convenience: run on the smoothed WB-style oracle grad f_i^* + r z.
Trajectory run(const netgraph::NetworkSchedule& schedule, const DualOracle& oracle, const Params& params,
               const RunOptions& options, const RecordSink& sink = {});

/// Baseline run on a plain oracle with parameters from baseline_params().
Trajectory baseline_run(const netgraph::NetworkSchedule& schedule, const DualOracle& oracle,
                        const Params& params, const RunOptions& options, const RecordSink& sink = {});

}  // namespace tvadom::adom
