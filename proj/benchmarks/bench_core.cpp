#include <benchmark/benchmark.h>

#include "tvadom/adom/solver.hpp"
#include "tvadom/entot/barycenter_oracle.hpp"
#include "tvadom/entot/dual.hpp"
#include "tvadom/entot/exact_ot.hpp"
#include "tvadom/harness/gaussian.hpp"
#include "tvadom/netgraph/schedule.hpp"
#include "tvadom/netgraph/spectral.hpp"

using namespace tvadom;

namespace {

harness::GaussianDataset dataset(int m, int d) {
  harness::GaussianDatasetOptions o;
  o.nodes = m;
  o.grid = harness::Grid{0.0, 1.0, d};
  return harness::make_gaussian_dataset(o);
}

void BM_DualGrad(benchmark::State& st) {
  const int d = static_cast<int>(st.range(0));
  const auto data = dataset(2, d);
  const Vector z = Vector::LinSpaced(d, -0.5, 0.5);
  for (auto _ : st) benchmark::DoNotOptimize(entot::dual_grad(data.measures[0], data.cost, 0.01, z));
  st.SetComplexityN(d);
}
BENCHMARK(BM_DualGrad)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNSquared);

void BM_AdomStep(benchmark::State& st) {
  const int m = 10, d = static_cast<int>(st.range(0));
  const auto data = dataset(m, d);
  const entot::BarycenterOracle wb(data.measures, data.cost, 0.01);
  netgraph::ScheduleSpec spec;
  spec.family = netgraph::Family::cycle;
  spec.nodes = m;
  const netgraph::NetworkSchedule sched(spec);
  const auto p = adom::derive_params(0.001, 0.01, netgraph::spectral_bounds(sched, 1));
  const adom::SmoothedOracle h(wb, 0.001);
  const auto lap = sched.laplacian(0);
  auto s = adom::initial_state(m, d);
  for (auto _ : st) {
    adom::adom_step(s, lap, p, h);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_AdomStep)->Arg(50)->Arg(100)->Arg(200);

void BM_ExactOt(benchmark::State& st) {
  const int d = static_cast<int>(st.range(0));
  const auto data = dataset(2, d);
  for (auto _ : st) benchmark::DoNotOptimize(entot::exact_ot(data.measures[0], data.measures[1], data.cost).value);
}
BENCHMARK(BM_ExactOt)->Arg(25)->Arg(50)->Arg(100);

void BM_Jacobi(benchmark::State& st) {
  const int m = static_cast<int>(st.range(0));
  netgraph::ScheduleSpec spec;
  spec.family = netgraph::Family::erdos_renyi;
  spec.nodes = m;
  spec.edge_prob = 0.3;
  const Matrix l = netgraph::NetworkSchedule(spec).laplacian(0).matrix();
  for (auto _ : st) benchmark::DoNotOptimize(netgraph::symmetric_eigenvalues(l));
}
BENCHMARK(BM_Jacobi)->Arg(10)->Arg(50)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
