#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "fixtures.hpp"
#include "tvadom/common/errors.hpp"
#include "tvadom/netgraph/spectral.hpp"

using namespace tvadom;
using netgraph::Family;

namespace {

netgraph::SpectralBounds bounds_of(Family f, int m, std::optional<long> epoch = std::nullopt, long horizon = 1) {
  netgraph::ScheduleSpec s;
  s.family = f;
  s.nodes = m;
  s.epoch_len = epoch;
  return netgraph::spectral_bounds(netgraph::NetworkSchedule(s), horizon);
}

}  // namespace

TEST(Jacobi, MatchesEigenOnRandomSymmetric) {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(30));
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = rng.uniform(-3, 3);
    const auto got = netgraph::symmetric_eigenvalues(a);
    Eigen::SelfAdjointEigenSolver<Matrix> es(a);
    ASSERT_EQ(static_cast<int>(got.size()), n);
    for (int k = 0; k < n; ++k) EXPECT_NEAR(got[static_cast<std::size_t>(k)], es.eigenvalues()[k], 1e-10);
  }
}

TEST(Jacobi, RejectsAsymmetric) {
  Matrix a(2, 2);
  a << 1, 2, 3, 4;
  EXPECT_THROW(netgraph::symmetric_eigenvalues(a), InvalidArgument);
}

TEST(SpectralBounds, Complete) {
  const auto b = bounds_of(Family::complete, 6);
  EXPECT_NEAR(b.lambda_min_plus, 6.0, 1e-9);
  EXPECT_NEAR(b.lambda_max, 6.0, 1e-9);
}

TEST(SpectralBounds, Star) {
  const auto b = bounds_of(Family::star, 5);
  EXPECT_NEAR(b.lambda_min_plus, 1.0, 1e-9);
  EXPECT_NEAR(b.lambda_max, 5.0, 1e-9);
}

TEST(SpectralBounds, CycleFour) {
  const auto b = bounds_of(Family::cycle, 4);
  EXPECT_NEAR(b.lambda_min_plus, 2.0, 1e-9);
  EXPECT_NEAR(b.lambda_max, 4.0, 1e-9);
}

TEST(SpectralBounds, CycleAnalytic) {
  for (int m = 3; m <= 30; ++m) {
    const auto b = bounds_of(Family::cycle, m);
    double hi = 0.0;
    for (int k = 0; k < m; ++k) hi = std::max(hi, 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * k / m));
    EXPECT_NEAR(b.lambda_min_plus, 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi / m), 1e-9) << m;
    EXPECT_NEAR(b.lambda_max, hi, 1e-9) << m;
  }
}

TEST(SpectralBounds, RelabeledCycleKeepsSpectrum) {
  const auto b = bounds_of(Family::cycle, 9, 1, 25);
  EXPECT_NEAR(b.lambda_min_plus, 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi / 9), 1e-9);
}

TEST(SpectralBounds, RandomFamilyCoversEpochs) {
  netgraph::ScheduleSpec s;
  s.family = Family::erdos_renyi;
  s.nodes = 8;
  s.edge_prob = 0.4;
  s.epoch_len = 2;
  s.seed = 4;
  const netgraph::NetworkSchedule sched(s);
  const auto b = netgraph::spectral_bounds(sched, 20);
  double lo = 1e300, hi = 0;
  for (long e = 0; e < 10; ++e) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(sched.epoch_laplacian(e).matrix());
    lo = std::min(lo, es.eigenvalues()[1]);
    hi = std::max(hi, es.eigenvalues()[7]);
  }
  EXPECT_NEAR(b.lambda_min_plus, lo, 1e-9);
  EXPECT_NEAR(b.lambda_max, hi, 1e-9);
  EXPECT_GT(b.lambda_min_plus, 0.0);
  EXPECT_LE(b.lambda_min_plus, b.lambda_max);
}

TEST(SpectralBounds, HorizonMustBePositive) {
  netgraph::ScheduleSpec s;
  EXPECT_THROW(netgraph::spectral_bounds(netgraph::NetworkSchedule(s), 0), InvalidArgument);
}
