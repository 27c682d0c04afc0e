#include "tvadom/harness/experiment.hpp"

#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "tvadom/adom/solver.hpp"
#include "tvadom/common/errors.hpp"
#include "tvadom/common/parallel.hpp"
#include "tvadom/entot/barycenter_oracle.hpp"
#include "tvadom/entot/bounds.hpp"
#include "tvadom/entot/exact_ot.hpp"
#include "tvadom/harness/gaussian.hpp"
#include "tvadom/harness/mnist.hpp"

namespace tvadom::harness {
namespace {

namespace fs = std::filesystem;

std::string real_text(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

struct Problem {
  std::vector<entot::Histogram> measures;
  entot::CostMatrix cost;
  std::optional<entot::Histogram> reference;
};

Problem build_problem(const ExperimentConfig& cfg) {
  if (cfg.dataset == Dataset::gaussians) {
    GaussianDatasetOptions opt;
    opt.nodes = cfg.m;
    opt.grid = Grid{cfg.grid_lo, cfg.grid_hi, cfg.d};
    opt.mean_lo = cfg.mean_lo;
    opt.mean_hi = cfg.mean_hi;
    opt.std_lo = cfg.std_lo;
    opt.std_hi = cfg.std_hi;
    opt.delta = cfg.delta;
    opt.seed = cfg.seed;
    auto data = make_gaussian_dataset(opt);
    return {std::move(data.measures), std::move(data.cost), std::move(data.barycenter)};
  }
  auto data = load_mnist(cfg.mnist_images, cfg.mnist_labels, cfg.digit, cfg.m, cfg.delta);
  if (data.cost.size() != cfg.d)
    throw InvalidArgument("config: d = " + std::to_string(cfg.d) + " but images have " +
                          std::to_string(data.cost.size()) + " pixels");
  return {std::move(data.measures), std::move(data.cost), std::nullopt};
}

/// (1/m) sum_i W(q_i, proj(x_i)).
double mean_transport_cost(const Problem& problem, const NodeStack& outputs, int threads) {
  const int m = static_cast<int>(problem.measures.size());
  std::vector<double> values(static_cast<std::size_t>(m));
  parallel_for(m, threads, [&](int i) {
    const auto x = entot::project_to_simplex(outputs.row(i).transpose());
    values[static_cast<std::size_t>(i)] = entot::exact_ot(problem.measures[static_cast<std::size_t>(i)], x, problem.cost).value;
  });
  double total = 0.0;
  for (double v : values) total += v;
  return total / m;
}

NodeStack project_rows(const NodeStack& outputs) {
  NodeStack out(outputs.rows(), outputs.cols());
  for (Eigen::Index i = 0; i < outputs.rows(); ++i)
    out.row(i) = entot::project_to_simplex(outputs.row(i).transpose()).mass().transpose();
  return out;
}

void write_histograms(const fs::path& path, const NodeStack& hist, const std::optional<entot::Histogram>& ref) {
  std::ofstream out(path);
  auto line = [&](const std::string& label, auto&& values, Eigen::Index n) {
    out << label;
    for (Eigen::Index k = 0; k < n; ++k) out << ',' << real_text(values(k));
    out << '\n';
  };
  for (Eigen::Index i = 0; i < hist.rows(); ++i) line(std::to_string(i), hist.row(i), hist.cols());
  if (ref) line("reference", ref->mass(), ref->size());
}

void write_manifest(const fs::path& path, const ExperimentConfig& cfg, const adom::Params& params,
                    const std::string& objective_column, double k_squared, const std::string& status,
                    long iterations_done) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json config;
  for (const auto& [k, v] : to_key_values(cfg)) config[k] = v;
  j["config"] = config;
  j["spectral_bounds"] = {{"lambda_min_plus", params.bounds.lambda_min_plus},
                          {"lambda_max", params.bounds.lambda_max}};
  j["params"] = {{"r", params.r},         {"gamma", params.gamma}, {"alpha", params.alpha},
                 {"eta", params.eta},     {"theta", params.theta}, {"sigma", params.sigma},
                 {"tau", params.tau},     {"rate", params.rate()}};
  j["k_squared"] = k_squared;
  j["value_floor"] = entot::barycenter_value_floor(cfg.gamma, cfg.r, cfg.m, cfg.d, k_squared);
  j["csv_columns"] = {"iteration", "objective_gap", "consensus", "wall_time"};
  j["objective_column"] = objective_column;
  j["objective_column_meaning"] =
      objective_column == "objective_gap"
          ? "(1/m)(sum_i W(q_i, x_i) - sum_i W(q_i, p*)), exact OT, x_i projected onto the simplex"
          : "(1/m) sum_i W(q_i, x_i), exact OT; no analytic barycenter for this dataset";
  j["status"] = status;
  j["iterations_done"] = iterations_done;
  j["git_describe"] = build_version();
  std::ofstream(path) << j.dump(2) << '\n';
}

}  // namespace

void write_csv_row(std::ostream& out, const MetricsRow& row) {
  out << row.iteration << ',' << real_text(row.objective_gap) << ',' << real_text(row.consensus) << ','
      << real_text(row.wall_time) << '\n';
}

std::string build_version() { return TVADOM_GIT_DESCRIBE; }

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  const Problem problem = build_problem(cfg);

  netgraph::ScheduleSpec spec;
  spec.family = cfg.family;
  spec.nodes = cfg.m;
  spec.edge_prob = cfg.edge_prob;
  spec.epoch_len = cfg.epoch_len;
  spec.seed = cfg.schedule_seed;
  const netgraph::NetworkSchedule schedule(spec);

  ExperimentResult result;
  result.config = cfg;
  result.params = adom::derive_params(cfg.r, cfg.gamma, netgraph::spectral_bounds(schedule, cfg.n_iters));
  result.reference = problem.reference;
  result.objective_column = problem.reference ? "objective_gap" : "mean_objective";
  const double k_squared = entot::k_bound(problem.cost, cfg.gamma, cfg.delta);

  double reference_cost = 0.0;
  if (problem.reference) {
    NodeStack ref(cfg.m, cfg.d);
    for (int i = 0; i < cfg.m; ++i) ref.row(i) = problem.reference->mass().transpose();
    reference_cost = mean_transport_cost(problem, ref, cfg.threads);
  }

  const entot::BarycenterOracle oracle(problem.measures, problem.cost, cfg.gamma);

  std::ofstream csv;
  fs::path dir;
  if (!cfg.output.empty()) {
    dir = cfg.output;
    fs::create_directories(dir);
    csv.open(dir / "metrics.csv");
    if (!csv) throw FormatError("cannot write " + (dir / "metrics.csv").string());
    csv << kCsvHeader << '\n';
  }

  adom::RunOptions options;
  options.n_iters = cfg.n_iters;
  options.record_every = cfg.record_every;
  options.keep_outputs = false;
  options.threads = cfg.threads;

  auto sink = [&](const adom::Record& rec, const adom::State& state) {
    MetricsRow row;
    row.iteration = rec.iteration;
    row.consensus = rec.consensus;
    row.objective_gap = mean_transport_cost(problem, state.output, cfg.threads) - reference_cost;
    if (cfg.record_wall_time)
      row.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.rows.push_back(row);
    if (csv.is_open()) {
      write_csv_row(csv, row);
      csv.flush();
    }
  };

  try {
    auto traj = adom::run(schedule, oracle, result.params, options, sink);
    result.final_histograms = project_rows(traj.final_state.output);
  } catch (const adom::RunAborted& err) {
    if (!dir.empty())
      write_manifest(dir / "manifest.json", cfg, result.params, result.objective_column, k_squared, "diverged",
                     err.iteration());
    throw;
  }

  if (!dir.empty()) {
    write_manifest(dir / "manifest.json", cfg, result.params, result.objective_column, k_squared, "completed",
                   cfg.n_iters);
    write_histograms(dir / "histograms.csv", result.final_histograms, result.reference);
  }
  return result;
}

std::vector<ExperimentResult> run_sweep(const std::vector<ExperimentConfig>& configs, int workers) {
  std::vector<std::optional<ExperimentResult>> slots(configs.size());
  parallel_for(static_cast<int>(configs.size()), workers,
               [&](int i) { slots[static_cast<std::size_t>(i)] = run_experiment(configs[static_cast<std::size_t>(i)]); });
  std::vector<ExperimentResult> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace tvadom::harness
