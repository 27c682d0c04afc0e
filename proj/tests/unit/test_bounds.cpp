#include <gtest/gtest.h>

#include <cmath>

#include "tvadom/common/errors.hpp"
#include "tvadom/entot/bounds.hpp"

using namespace tvadom;

namespace {

entot::CostMatrix line_cost(const std::vector<double>& pts, bool normalize) {
  Matrix m(static_cast<Eigen::Index>(pts.size()), 1);
  for (std::size_t i = 0; i < pts.size(); ++i) m(static_cast<Eigen::Index>(i), 0) = pts[i];
  return entot::cost_matrix(m, normalize);
}

}  // namespace

TEST(KBound, ZeroCost) {
  const int d = 7;
  const double gamma = 0.03, delta = 1e-3;
  const entot::CostMatrix m(Matrix::Zero(d, d));
  const double term = 2 * gamma * std::log(d) - gamma * std::log(delta / 2);
  EXPECT_NEAR(entot::k_bound(m, gamma, delta), d * term * term, 1e-14);
}

TEST(KBound, ZeroCostHomogeneousInGamma) {
  const entot::CostMatrix m(Matrix::Zero(5, 5));
  const double a = std::sqrt(entot::k_bound(m, 0.02, 1e-4));
  const double b = std::sqrt(entot::k_bound(m, 0.04, 1e-4));
  EXPECT_NEAR(b / a, 2.0, 1e-14);
}

TEST(KBound, HandEvaluatedThreePoints) {
  // points {0, 1, 3}: M rows (0,1,9), (1,0,4), (9,4,0); min_{i != j} max_l |M_jl - M_il| = 5, 5, 8
  const auto m = line_cost({0.0, 1.0, 3.0}, false);
  const double gamma = 0.1, delta = 0.01;
  const double base = 2 * gamma * std::log(3.0) - gamma * std::log(delta / 2);
  const double want = (base + 5) * (base + 5) * 2 + (base + 8) * (base + 8);
  EXPECT_NEAR(entot::k_bound(m, gamma, delta), want, 1e-12);
}

TEST(KBound, ExplicitRho) {
  const entot::CostMatrix m(Matrix::Zero(3, 3));
  const double gamma = 0.1;
  const double term = 2 * gamma * std::log(3.0) - gamma * std::log(0.2);
  EXPECT_NEAR(entot::k_bound(m, gamma, 0.01, 0.2), 3 * term * term, 1e-14);
}

TEST(KBound, DeltaRange) {
  const entot::CostMatrix m(Matrix::Zero(4, 4));
  EXPECT_NO_THROW(entot::k_bound(m, 0.1, 0.25));
  EXPECT_THROW(entot::k_bound(m, 0.1, 0.26), InvalidArgument);
  EXPECT_THROW(entot::k_bound(m, 0.1, 0.0), InvalidArgument);
  EXPECT_THROW(entot::k_bound(m, 0.0, 0.1), InvalidArgument);
  EXPECT_THROW(entot::k_bound(m, 0.1, 0.1, 1.0), InvalidArgument);
}

TEST(ParamsForEps, EntropyGapIsQuarterEps) {
  const auto m = line_cost({0, 1, 2, 3, 4}, true);
  const auto p = entot::params_for_eps(0.2, 3, m, 1e-3);
  EXPECT_NEAR(2 * p.gamma * std::log(5.0), 0.05, 1e-15);
  EXPECT_NEAR(p.r, 0.2 / (4 * 3 * p.k_squared), 1e-18);
  EXPECT_NEAR(p.k_squared, entot::k_bound(m, p.gamma, 1e-3), 1e-15);
}

TEST(ParamsForEps, HalvingEps) {
  const auto m = line_cost({0, 1, 2, 3, 4, 5}, true);
  const auto a = entot::params_for_eps(0.2, 4, m, 1e-4);
  const auto b = entot::params_for_eps(0.1, 4, m, 1e-4);
  EXPECT_NEAR(b.gamma, a.gamma / 2, 1e-16);
  // the entropy part of K^2 shrinks with gamma, so r falls by at most half
  EXPECT_LT(b.k_squared, a.k_squared);
  EXPECT_GE(b.r, a.r / 2);
  EXPECT_NEAR(b.r, 0.1 / (4 * 4 * b.k_squared), 1e-15);
}

TEST(ParamsForEps, RegressionValues) {
  std::vector<double> pts(100);
  for (int i = 0; i < 100; ++i) pts[static_cast<std::size_t>(i)] = i / 99.0;
  const auto p = entot::params_for_eps(0.1, 10, line_cost(pts, true), 1e-6);
  EXPECT_NEAR(p.gamma, 0.002714340511895324, 1e-15);
  EXPECT_NEAR(p.k_squared, 0.632605007589925, 1e-10);
  EXPECT_NEAR(p.r, 0.003951913073727328, 1e-12);
}

TEST(ParamsForEps, Errors) {
  const auto m = line_cost({0, 1}, true);
  EXPECT_THROW(entot::params_for_eps(0.0, 2, m, 0.1), InvalidArgument);
  EXPECT_THROW(entot::params_for_eps(0.1, 0, m, 0.1), InvalidArgument);
}

TEST(ValueFloor, Formula) {
  EXPECT_NEAR(entot::barycenter_value_floor(0.01, 0.001, 10, 100, 2.0),
              0.02 * std::log(100.0) + 0.001 * 10 * 2.0 / (4 * 1.00001), 1e-15);
}
