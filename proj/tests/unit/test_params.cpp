#include <gtest/gtest.h>

#include <cmath>

#include "tvadom/adom/params.hpp"
#include "tvadom/common/errors.hpp"

using namespace tvadom;
using adom::SpectralBounds;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(DeriveParams, HandEvaluatedExample) {
  const auto p = adom::derive_params(0.001, 0.01, SpectralBounds{2.0, 4.0});
  EXPECT_NEAR(p.alpha, 5e-4, 1e-18);
  EXPECT_NEAR(p.sigma, 0.25, 1e-16);
  EXPECT_NEAR(p.theta, 2.49998e-3, 1e-8);
  EXPECT_NEAR(p.eta, 0.45175, 1e-5);
  EXPECT_NEAR(p.tau, 2.2587e-4, 1e-8);
  EXPECT_DOUBLE_EQ(p.rate(), 1.0 - p.tau);
}

TEST(DeriveParams, TauBelowSpectralRatio) {
  for (double r : {1e-4, 1e-2, 1.0, 100.0})
    for (double g : {1e-3, 0.1, 10.0}) {
      const auto p = adom::derive_params(r, g, SpectralBounds{0.5, 3.0});
      EXPECT_LT(p.tau, 0.5 / (7 * 3.0));
      EXPECT_GT(p.tau, 0.0);
    }
}

TEST(DeriveParams, CompleteGraphRatioCancels) {
  const double r = 0.003, g = 0.2;
  const auto p = adom::derive_params(r, g, SpectralBounds{6.0, 6.0});
  EXPECT_LE(rel(p.tau, std::sqrt(r * g / (1 + r * g)) / 7.0), 1e-15);
}

TEST(DeriveParams, EquivalentToBaselineUnderSmoothing) {
  const double grid[] = {1e-4, 1e-3, 1e-2, 1e-1};
  const SpectralBounds b{0.7, 5.3};
  for (double r : grid)
    for (double g : grid) {
      const auto a = adom::derive_params(r, g, b);
      const auto base = adom::baseline_params(1.0 / r, g / (1.0 + r * g), b);
      EXPECT_LE(rel(a.alpha, base.alpha), 1e-12);
      EXPECT_LE(rel(a.eta, base.eta), 1e-12);
      EXPECT_LE(rel(a.theta, base.theta), 1e-12);
      EXPECT_LE(rel(a.sigma, base.sigma), 1e-12);
      EXPECT_LE(rel(a.tau, base.tau), 1e-12);
    }
}

TEST(DeriveParams, RejectsBadInputs) {
  const SpectralBounds b{1.0, 2.0};
  EXPECT_THROW(adom::derive_params(0.0, 0.1, b), InvalidArgument);
  EXPECT_THROW(adom::derive_params(0.1, -1.0, b), InvalidArgument);
  EXPECT_THROW(adom::derive_params(0.1, 0.1, SpectralBounds{0.0, 2.0}), InvalidArgument);
  EXPECT_THROW(adom::derive_params(0.1, 0.1, SpectralBounds{3.0, 2.0}), InvalidArgument);
  EXPECT_THROW(adom::baseline_params(1.0, 2.0, b), InvalidArgument);  // mu > L
}

TEST(IterationEstimate, RegressionValue) {
  const SpectralBounds b{2.0, 4.0};
  const double c2 = adom::value_constant(10, 0.001, 0.01, 1.0, b);
  EXPECT_LE(rel(c2, 25001500.012500003), 1e-13);
  EXPECT_EQ(adom::iteration_estimate(0.1, 0.001, 0.01, b, c2), 88678);
}

TEST(IterationEstimate, DoublingLambdaMax) {
  const double c2 = 1e4;
  const auto a = adom::iteration_estimate(0.1, 0.01, 0.1, SpectralBounds{1.0, 3.0}, c2);
  const auto b = adom::iteration_estimate(0.1, 0.01, 0.1, SpectralBounds{1.0, 6.0}, c2);
  EXPECT_GE(b, 2 * a - 1);
}

TEST(IterationEstimate, TenfoldEpsAddsLogTerm) {
  const double r = 0.01, g = 0.1, c2 = 1e4;
  const SpectralBounds b{1.0, 3.0};
  const double per_log = 7.0 * 3.0 * std::sqrt((1 + r * g) / (r * g));
  const auto a = adom::iteration_estimate(1e-2, r, g, b, c2);
  const auto c = adom::iteration_estimate(1e-3, r, g, b, c2);
  EXPECT_NEAR(static_cast<double>(c - a), per_log * std::log(10.0), 1.0);
}

TEST(IterationEstimate, ClampsWhenAlreadyAccurate) {
  EXPECT_EQ(adom::iteration_estimate(10.0, 0.1, 0.1, SpectralBounds{1.0, 1.0}, 1.0), 0);
}
