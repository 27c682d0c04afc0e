#include "tvadom/adom/solver.hpp"

#include <optional>
#include <string>

#include "tvadom/harness/metrics.hpp"

namespace tvadom::adom {
namespace {

void check_finite(const NodeStack& s, const char* name, long iteration) {
  if (!s.allFinite()) throw NumericalDivergence(name, iteration);
}

}  // namespace

State initial_state(int nodes, int dim) {
  if (nodes < 1 || dim < 1) throw InvalidArgument("initial_state: empty dimensions");
  State s;
  s.z = NodeStack::Zero(nodes, dim);
  s.z_f = s.z;
  s.z_g = s.z;
  s.momentum = s.z;
  s.output = s.z;
  return s;
}

void adom_step(State& state, const netgraph::Laplacian& laplacian, const Params& params,
               const StackedGradient& gradient) {
  const auto m = state.z.rows();
  if (laplacian.nodes() != m || gradient.nodes() != m || gradient.dim() != state.z.cols())
    throw InvalidArgument("adom_step: state is " + std::to_string(m) + "x" + std::to_string(state.z.cols()) +
                          ", laplacian has " + std::to_string(laplacian.nodes()) + " nodes, oracle is " +
                          std::to_string(gradient.nodes()) + "x" + std::to_string(gradient.dim()));
  const long n = state.iteration;

  state.z_g = params.tau * state.z + (1.0 - params.tau) * state.z_f;
  check_finite(state.z_g, "z_g", n);

  gradient.evaluate(state.z_g, state.output);
  check_finite(state.output, "grad H*(z_g)", n);

  NodeStack step = state.momentum - params.eta * state.output;
  NodeStack delta = params.sigma * (laplacian.matrix() * step);
  state.momentum = step - delta;
  state.z += params.eta * params.alpha * (state.z_g - state.z) + delta;
  state.z_f = state.z_g - params.theta * (laplacian.matrix() * state.output);

  check_finite(state.momentum, "m", n);
  check_finite(state.z, "z", n);
  check_finite(state.z_f, "z_f", n);
  ++state.iteration;
}

void baseline_adom_step(State& state, const netgraph::Laplacian& laplacian, const Params& params,
                        const DualOracle& oracle) {
  adom_step(state, laplacian, params, PlainStackedOracle(oracle));
}

Trajectory run(const netgraph::NetworkSchedule& schedule, const StackedGradient& gradient, const Params& params,
               const RunOptions& options, const RecordSink& sink) {
  if (options.n_iters < 1)
    throw InvalidArgument("run: n_iters must be >= 1, got " + std::to_string(options.n_iters));
  if (options.record_every < 1) throw InvalidArgument("run: record_every must be >= 1");
  if (schedule.nodes() != gradient.nodes())
    throw InvalidArgument("run: schedule has " + std::to_string(schedule.nodes()) + " nodes, oracle has " +
                          std::to_string(gradient.nodes()));

  Trajectory traj;
  State state = initial_state(gradient.nodes(), gradient.dim());
  long current_epoch = -1;
  std::optional<netgraph::Laplacian> laplacian;

  try {
    for (long n = 0; n < options.n_iters; ++n) {
      const long e = schedule.epoch(n);
      if (e != current_epoch) {
        laplacian = schedule.epoch_laplacian(e);
        current_epoch = e;
      }
      adom_step(state, *laplacian, params, gradient);
      ++traj.oracle_evaluations;
      traj.laplacian_products += 2;

      if (n % options.record_every == 0 || n + 1 == options.n_iters) {
        Record rec;
        rec.iteration = n;
        rec.consensus = harness::consensus_metric(state.output);
        if (options.keep_outputs) rec.output = state.output;
        if (sink) sink(rec, state);
        traj.records.push_back(std::move(rec));
      }
    }
  } catch (const RunAborted&) {
    throw;
  } catch (const NumericalDivergence& err) {
    traj.final_state = std::move(state);
    throw RunAborted(err, std::move(traj));
  }
  traj.final_state = std::move(state);
  return traj;
}

Trajectory run(const netgraph::NetworkSchedule& schedule, const DualOracle& oracle, const Params& params,
               const RunOptions& options, const RecordSink& sink) {
  return run(schedule, SmoothedOracle(oracle, params.r, options.threads), params, options, sink);
}

Trajectory baseline_run(const netgraph::NetworkSchedule& schedule, const DualOracle& oracle,
                        const Params& params, const RunOptions& options, const RecordSink& sink) {
  return run(schedule, PlainStackedOracle(oracle, options.threads), params, options, sink);
}

}  // namespace tvadom::adom
