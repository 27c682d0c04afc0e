// tvadom: run, sweep and inspect decentralized barycenter experiments.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tvadom/adom/solver.hpp"
#include "tvadom/common/errors.hpp"
#include "tvadom/common/rng.hpp"
#include "tvadom/entot/dual.hpp"
#include "tvadom/harness/experiment.hpp"
#include "tvadom/netgraph/spectral.hpp"

namespace {

using namespace tvadom;

/// --<key> flags for every config key; only the ones given are applied.
struct ConfigFlags {
  std::string config_path;
  std::map<std::string, std::string> values;

  void attach(CLI::App& app) {
    app.add_option("--config", config_path, "key=value config file or a run manifest (manifest.json)");
    for (const auto& key : harness::config_keys())
      app.add_option("--" + key, values[key], "override config key '" + key + "'");
  }

  harness::ExperimentConfig resolve(const CLI::App& app) const {
    harness::ExperimentConfig cfg = config_path.empty() ? harness::ExperimentConfig{} : harness::load_config(config_path);
    for (const auto& key : harness::config_keys())
      if (app.count("--" + key) > 0) harness::set_key(cfg, key, values.at(key));
    return cfg;
  }
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void print_summary(const harness::ExperimentResult& res) {
  const auto& last = res.rows.back();
  std::printf("family=%s epoch_len=%s iterations=%ld %s=%.6g consensus=%.6g rate=%.10f\n",
              std::string(netgraph::to_string(res.config.family)).c_str(),
              harness::get_key(res.config, "epoch_len").c_str(), last.iteration + 1, res.objective_column.c_str(),
              last.objective_gap, last.consensus, res.params.rate());
}

int cmd_run(const CLI::App& app, const ConfigFlags& flags) {
  const auto cfg = flags.resolve(app);
  const auto res = harness::run_experiment(cfg);
  if (cfg.output.empty()) {
    std::cout << harness::kCsvHeader << '\n';
    for (const auto& row : res.rows) harness::write_csv_row(std::cout, row);
  } else {
    print_summary(res);
    std::printf("wrote %s\n", cfg.output.c_str());
  }
  return 0;
}

int cmd_sweep(const CLI::App& app, const ConfigFlags& flags, const std::string& families,
              const std::string& epoch_lens, int workers) {
  const auto base = flags.resolve(app);
  if (base.output.empty()) throw InvalidArgument("sweep needs --output (a directory)");
  const auto fam = families.empty() ? std::vector<std::string>{harness::get_key(base, "family")} : split(families);
  const auto lens = epoch_lens.empty() ? std::vector<std::string>{harness::get_key(base, "epoch_len")} : split(epoch_lens);

  std::vector<harness::ExperimentConfig> configs;
  for (const auto& f : fam)
    for (const auto& e : lens) {
      auto cfg = base;
      harness::set_key(cfg, "family", f);
      harness::set_key(cfg, "epoch_len", e);
      cfg.output = base.output + "/" + f + "_epoch" + e;
      configs.push_back(cfg);
    }
  for (const auto& res : harness::run_sweep(configs, workers)) print_summary(res);
  return 0;
}

int cmd_spectra(const std::string& family, int m, double edge_prob, const std::string& epoch_len,
                std::uint64_t seed, long horizon) {
  netgraph::ScheduleSpec spec;
  spec.family = netgraph::parse_family(family);
  spec.nodes = m;
  spec.edge_prob = edge_prob;
  if (epoch_len != "inf") spec.epoch_len = std::stol(epoch_len);
  spec.seed = seed;
  const netgraph::NetworkSchedule schedule(spec);
  const auto b = netgraph::spectral_bounds(schedule, horizon);
  std::printf("lambda_min_plus = %.12g\nlambda_max = %.12g\ncondition = %.12g\n", b.lambda_min_plus, b.lambda_max,
              b.lambda_max / b.lambda_min_plus);
  return 0;
}

int cmd_oracle_check(int d, double gamma, std::uint64_t seed, int trials) {
  Rng rng(seed);
  double fd_dev = 0.0;
  double simplex_dev = 0.0;
  const double h = 1e-5;
  for (int t = 0; t < trials; ++t) {
    Matrix pts(d, 2);
    for (int i = 0; i < d; ++i) pts.row(i) << rng.uniform(), rng.uniform();
    const auto cost = entot::cost_matrix(pts, true);
    Vector w(d), z(d);
    for (int i = 0; i < d; ++i) {
      w[i] = rng.uniform(0.05, 1.0);
      z[i] = rng.uniform(-1.0, 1.0);
    }
    const auto q = entot::Histogram::normalized(w);
    const auto g = entot::dual_grad(q, cost, gamma, z);
    simplex_dev = std::max(simplex_dev, std::abs(g.mass().sum() - 1.0));
    simplex_dev = std::max(simplex_dev, std::max(0.0, -g.min()));
    for (int l = 0; l < d; ++l) {
      Vector zp = z, zm = z;
      zp[l] += h;
      zm[l] -= h;
      const double fd = (entot::dual_value(q, cost, gamma, zp) - entot::dual_value(q, cost, gamma, zm)) / (2 * h);
      fd_dev = std::max(fd_dev, std::abs(fd - g[l]) / std::max(1.0, std::abs(g[l])));
    }
  }
  std::printf("max finite-difference deviation = %.3e\nmax simplex deviation = %.3e\n", fd_dev, simplex_dev);
  return fd_dev <= 1e-6 && simplex_dev <= 1e-10 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decentralized Wasserstein barycenters over time-varying networks"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run one experiment");
  ConfigFlags run_flags;
  run_flags.attach(*run);

  auto* sweep = app.add_subcommand("sweep", "run a grid of topologies and epoch lengths concurrently");
  ConfigFlags sweep_flags;
  sweep_flags.attach(*sweep);
  std::string families, epoch_lens;
  int workers = 4;
  sweep->add_option("--families", families, "comma-separated schedule families");
  sweep->add_option("--epoch-lens", epoch_lens, "comma-separated epoch lengths (integers or inf)");
  sweep->add_option("--workers", workers, "concurrent runs")->check(CLI::PositiveNumber);

  auto* spectra = app.add_subcommand("spectra", "print Laplacian spectral bounds of a schedule");
  std::string sp_family = "cycle", sp_epoch = "inf";
  int sp_m = 10;
  double sp_p = 0.5;
  std::uint64_t sp_seed = 0;
  long sp_horizon = 1;
  spectra->add_option("--family", sp_family);
  spectra->add_option("--m", sp_m);
  spectra->add_option("--edge-prob", sp_p);
  spectra->add_option("--epoch-len", sp_epoch);
  spectra->add_option("--seed", sp_seed);
  spectra->add_option("--horizon", sp_horizon, "iterations covered")->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle-check", "finite-difference and simplex checks of the dual oracle");
  int oc_d = 5, oc_trials = 20;
  double oc_gamma = 0.05;
  std::uint64_t oc_seed = 0;
  oracle->add_option("--d", oc_d)->check(CLI::Range(2, 10000));
  oracle->add_option("--gamma", oc_gamma)->check(CLI::PositiveNumber);
  oracle->add_option("--seed", oc_seed);
  oracle->add_option("--trials", oc_trials)->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(*run, run_flags);
    if (*sweep) return cmd_sweep(*sweep, sweep_flags, families, epoch_lens, workers);
    if (*spectra) return cmd_spectra(sp_family, sp_m, sp_p, sp_epoch, sp_seed, sp_horizon);
    if (*oracle) return cmd_oracle_check(oc_d, oc_gamma, oc_seed, oc_trials);
  } catch (const std::exception& err) {
    std::fprintf(stderr, "tvadom: %s\n", err.what());
    return 1;
  }
  return 0;
}
