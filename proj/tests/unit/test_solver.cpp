#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <limits>

#include "fixtures.hpp"
#include "tvadom/adom/quadratic.hpp"
#include "tvadom/adom/solver.hpp"
#include "tvadom/entot/barycenter_oracle.hpp"
#include "tvadom/harness/metrics.hpp"

using namespace tvadom;
using netgraph::Family;

namespace {

netgraph::NetworkSchedule schedule(Family f, int m, std::optional<long> epoch = std::nullopt, std::uint64_t seed = 0) {
  netgraph::ScheduleSpec s;
  s.family = f;
  s.nodes = m;
  s.epoch_len = epoch;
  s.seed = seed;
  s.edge_prob = 0.5;
  return netgraph::NetworkSchedule(s);
}

class CountingGradient final : public adom::StackedGradient {
 public:
  explicit CountingGradient(const adom::StackedGradient& inner) : inner_(&inner) {}
  int nodes() const override { return inner_->nodes(); }
  int dim() const override { return inner_->dim(); }
  void evaluate(const NodeStack& z, NodeStack& out) const override {
    ++calls;
    inner_->evaluate(z, out);
  }
  double value(const NodeStack& z) const override { return inner_->value(z); }
  mutable std::atomic<long> calls{0};

 private:
  const adom::StackedGradient* inner_;
};

class PoisonedGradient final : public adom::StackedGradient {
 public:
  PoisonedGradient(int m, int d, long at) : m_(m), d_(d), at_(at) {}
  int nodes() const override { return m_; }
  int dim() const override { return d_; }
  void evaluate(const NodeStack& z, NodeStack& out) const override {
    out = z;
    out.array() += 1.0;
    out(0, 0) = calls++ >= at_ ? std::numeric_limits<double>::quiet_NaN() : static_cast<double>(calls);
  }
  double value(const NodeStack&) const override { return 0.0; }

 private:
  int m_, d_;
  long at_;
  mutable long calls = 0;
};

entot::BarycenterOracle random_wb(Rng& rng, int m, int d, double gamma) {
  std::vector<entot::Histogram> qs;
  for (int i = 0; i < m; ++i) qs.push_back(entot::floor_histogram(testkit::random_histogram(rng, d, 0.0), 1e-4));
  return entot::BarycenterOracle(qs, testkit::random_cost(rng, d), gamma);
}

// Fits skip the transient and stop once values reach rounding level.
constexpr long kBurnIn = 100;
constexpr double kFloor = 1e-24;

double fitted_log_slope(const std::vector<double>& y) {
  const double n = static_cast<double>(y.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double x = static_cast<double>(i), ly = std::log(y[i]);
    sx += x;
    sy += ly;
    sxx += x * x;
    sxy += x * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST(AdomStep, HandComputedTwoNodeScalar) {
  // f_i(x) = (g/2)(x - c_i)^2, smoothed: grad h_i^*(z) = c_i + z/g + r z
  const double g = 2.0, r = 0.1, c0 = 1.0, c1 = 3.0;
  const adom::QuadraticObjective f((NodeStack(2, 1) << c0, c1).finished(), g);
  const adom::SmoothedOracle h(f, r);
  adom::Params p;
  p.tau = 0.3;
  p.eta = 0.5;
  p.alpha = 0.2;
  p.sigma = 0.25;
  p.theta = 0.1;
  const auto lap = netgraph::Laplacian::from_edges(2, std::vector<netgraph::Edge>{{0, 1}});

  adom::State s = adom::initial_state(2, 1);
  const double z0 = 0.4, zf0 = -0.2, m0 = 0.7, m1 = -0.1;
  s.z << z0, -z0;
  s.z_f << zf0, -zf0;
  s.momentum << m0, m1;
  adom::adom_step(s, lap, p, h);

  const double zg0 = 0.3 * z0 + 0.7 * zf0, zg1 = -zg0;
  const double g0 = c0 + zg0 / g + r * zg0, g1 = c1 + zg1 / g + r * zg1;
  const double s0 = m0 - 0.5 * g0, s1 = m1 - 0.5 * g1;
  const double d0 = 0.25 * (s0 - s1), d1 = 0.25 * (s1 - s0);
  EXPECT_NEAR(s.z_g(0, 0), zg0, 1e-15);
  EXPECT_NEAR(s.output(0, 0), g0, 1e-15);
  EXPECT_NEAR(s.output(1, 0), g1, 1e-15);
  EXPECT_NEAR(s.momentum(0, 0), s0 - d0, 1e-15);
  EXPECT_NEAR(s.momentum(1, 0), s1 - d1, 1e-15);
  EXPECT_NEAR(s.z(0, 0), z0 + 0.5 * 0.2 * (zg0 - z0) + d0, 1e-15);
  EXPECT_NEAR(s.z(1, 0), -z0 + 0.5 * 0.2 * (zg1 + z0) + d1, 1e-15);
  EXPECT_NEAR(s.z_f(0, 0), zg0 - 0.1 * (g0 - g1), 1e-15);
  EXPECT_NEAR(s.z_f(1, 0), zg1 - 0.1 * (g1 - g0), 1e-15);
  EXPECT_EQ(s.iteration, 1);
}

TEST(AdomStep, ConsensusGradientIsStationary) {
  NodeStack c(4, 3);
  for (int i = 0; i < 4; ++i) c.row(i) << 0.2, -0.5, 1.0;
  const adom::QuadraticObjective f(c, 1.0);
  const auto p = adom::derive_params(0.1, 1.0, {2.0, 4.0});
  auto s = adom::initial_state(4, 3);
  const auto lap = schedule(Family::cycle, 4).laplacian(0);
  adom::adom_step(s, lap, p, adom::SmoothedOracle(f, 0.1));
  EXPECT_EQ(s.z.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(s.z_f.cwiseAbs().maxCoeff(), 0.0);

  auto b = adom::initial_state(4, 3);
  adom::baseline_adom_step(b, lap, adom::baseline_params(1.0, 1.0, {2.0, 4.0}), f);
  EXPECT_EQ(b.z.cwiseAbs().maxCoeff(), 0.0);
}

TEST(AdomStep, ShapeMismatch) {
  const adom::QuadraticObjective f(NodeStack::Zero(3, 2), 1.0);
  auto s = adom::initial_state(4, 2);
  const auto lap = schedule(Family::complete, 4).laplacian(0);
  EXPECT_THROW(adom::adom_step(s, lap, adom::derive_params(1, 1, {4, 4}), adom::SmoothedOracle(f, 1.0)),
               InvalidArgument);
}

TEST(AdomStep, PreservesZeroSumSubspace) {
  Rng rng(31);
  const int m = 7, d = 12;
  const auto wb = random_wb(rng, m, d, 0.05);
  const auto sched = schedule(Family::erdos_renyi, m, 3, 5);
  const auto p = adom::derive_params(0.01, 0.05, netgraph::spectral_bounds(sched, 300));
  const adom::SmoothedOracle h(wb, 0.01);
  auto s = adom::initial_state(m, d);
  for (long n = 0; n < 300; ++n) {
    adom::adom_step(s, sched.laplacian(n), p, h);
    for (const NodeStack* x : {&s.z, &s.z_f, &s.z_g})
      ASSERT_LE(x->colwise().sum().norm(), 1e-8 * std::max(1.0, x->norm())) << n;
  }
}

TEST(Run, RejectsZeroIterations) {
  const adom::QuadraticObjective f(NodeStack::Zero(3, 1), 1.0);
  adom::RunOptions o;
  o.n_iters = 0;
  EXPECT_THROW(adom::run(schedule(Family::complete, 3), f, adom::derive_params(1, 1, {3, 3}), o), InvalidArgument);
}

TEST(Run, OracleCountAndRecords) {
  const adom::QuadraticObjective f(NodeStack::Random(5, 2), 1.0);
  const adom::SmoothedOracle h(f, 0.5);
  const CountingGradient counted(h);
  adom::RunOptions o;
  o.n_iters = 23;
  o.record_every = 5;
  long sink_calls = 0;
  const auto traj = adom::run(schedule(Family::star, 5), counted, adom::derive_params(0.5, 1, {1, 5}), o,
                              [&](const adom::Record&, const adom::State&) { ++sink_calls; });
  EXPECT_EQ(counted.calls.load(), 23);
  EXPECT_EQ(traj.oracle_evaluations, 23);
  EXPECT_EQ(traj.laplacian_products, 46);
  std::vector<long> its;
  for (const auto& r : traj.records) its.push_back(r.iteration);
  EXPECT_EQ(its, (std::vector<long>{0, 5, 10, 15, 20, 22}));
  EXPECT_EQ(sink_calls, 6);
  EXPECT_EQ(traj.final_state.iteration, 23);
  EXPECT_EQ(traj.records.back().output, traj.final_state.output);
}

TEST(Run, Deterministic) {
  Rng rng(77);
  const auto wb = random_wb(rng, 6, 8, 0.05);
  const auto sched = schedule(Family::erdos_renyi, 6, 1, 3);
  const auto p = adom::derive_params(0.01, 0.05, netgraph::spectral_bounds(sched, 200));
  adom::RunOptions o;
  o.n_iters = 200;
  o.record_every = 10;
  const auto a = adom::run(sched, wb, p, o);
  o.threads = 3;
  const auto b = adom::run(sched, wb, p, o);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t k = 0; k < a.records.size(); ++k) {
    EXPECT_EQ(a.records[k].output, b.records[k].output);
    EXPECT_EQ(a.records[k].consensus, b.records[k].consensus);
  }
}

TEST(Run, DivergenceKeepsPartialTrajectory) {
  const PoisonedGradient bad(3, 2, 7);
  adom::RunOptions o;
  o.n_iters = 20;
  o.record_every = 2;
  try {
    adom::run(schedule(Family::complete, 3), bad, adom::derive_params(1, 1, {3, 3}), o);
    FAIL() << "expected RunAborted";
  } catch (const adom::RunAborted& err) {
    EXPECT_EQ(err.iterate(), "grad H*(z_g)");
    EXPECT_EQ(err.iteration(), 7);
    ASSERT_FALSE(err.partial().records.empty());
    EXPECT_EQ(err.partial().records.back().iteration, 6);
  }
}

TEST(Run, QuadraticConsensusDecaysWithinRate) {
  Rng rng(5);
  const int m = 6, d = 3;
  NodeStack c(m, d);
  for (int i = 0; i < m; ++i) c.row(i) = testkit::random_vector(rng, d).transpose();
  const adom::QuadraticObjective f(c, 1.0);
  const auto sched = schedule(Family::complete, m);
  const auto p = adom::derive_params(0.01, 1.0, netgraph::spectral_bounds(sched, 1));
  adom::RunOptions o;
  o.n_iters = 4000;
  const auto traj = adom::run(sched, f, p, o);
  std::vector<double> cons;
  for (const auto& r : traj.records)
    if (r.iteration >= kBurnIn && r.consensus > kFloor) cons.push_back(r.consensus);
  ASSERT_GE(cons.size(), 100u);
  const double slope = fitted_log_slope(cons);
  EXPECT_LT(slope, 0.0);
  EXPECT_LE(std::exp(slope), p.rate());
  for (std::size_t n = kBurnIn; 2 * n < traj.records.size(); n += 50) {
    if (traj.records[n].consensus <= kFloor) break;
    EXPECT_LE(traj.records[2 * n].consensus, traj.records[n].consensus) << n;
  }
  // the smoothed problem has the same minimizer, the mean of the centers
  const Vector xstar = f.minimizer();
  for (int i = 0; i < m; ++i) EXPECT_LE((traj.final_state.output.row(i).transpose() - xstar).norm(), 1e-6);
}

TEST(BaselineRun, QuadraticDecayWithinRateBound) {
  Rng rng(15);
  const int m = 5, d = 2;
  NodeStack c(m, d);
  for (int i = 0; i < m; ++i) c.row(i) = testkit::random_vector(rng, d).transpose();
  const double gamma = 2.0;
  const adom::QuadraticObjective f(c, gamma);
  const auto sched = schedule(Family::cycle, m);
  // (gamma/2)|x - c|^2 is gamma-smooth and gamma-strongly convex
  const auto p = adom::baseline_params(gamma, gamma, netgraph::spectral_bounds(sched, 1));
  adom::RunOptions o;
  o.n_iters = 4000;
  const auto traj = adom::baseline_run(sched, f, p, o);
  const Vector xstar = f.minimizer();
  std::vector<double> err;
  for (const auto& r : traj.records) {
    const double e = (r.output.rowwise() - xstar.transpose()).squaredNorm();
    if (r.iteration >= kBurnIn && e > kFloor) err.push_back(e);
  }
  ASSERT_GE(err.size(), 100u);
  const double ratio = std::exp(fitted_log_slope(err));
  const double bound = 1.0 - p.bounds.lambda_min_plus / (7.0 * p.bounds.lambda_max) *
                                 std::sqrt(p.strong_convexity / p.smoothness);
  EXPECT_LT(ratio, 1.0);
  EXPECT_LE(ratio, bound);
}
