#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qns/core/grid.hpp"
#include "qns/core/params.hpp"
#include "qns/core/phi_level.hpp"
#include "qns/core/scalar_functions.hpp"
#include "qns/core/transforms.hpp"
#include "qns/integrator/initial_data.hpp"

using namespace qns;

namespace {

State gauss_state(const Grid& grid, double a, double b, double sigma) {
  return initial_data({Family::kGaussBump, a, b, sigma}, grid);
}

double max_rel(const Field& a, const Field& b) {
  double worst = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j)
    worst = std::max(worst, std::abs(a[j] - b[j]) / std::max(1.0, std::abs(b[j])));
  return worst;
}

}  // namespace

TEST(PhysicalParams, RejectsInvalidValues) {
  EXPECT_THROW(PhysicalParams(0.0, 0.1, 2.0), ArgumentError);
  EXPECT_THROW(PhysicalParams(1.0, -0.1, 2.0), ArgumentError);
  EXPECT_THROW(PhysicalParams(1.0, 0.1, 0.5), ArgumentError);
  EXPECT_NO_THROW(PhysicalParams(1.0, 0.0, 1.0));
}

TEST(PhysicalParams, RegimeClassification) {
  EXPECT_EQ(PhysicalParams(1.0, 0.0, 2.0).regime(), Regime::kLimit);
  EXPECT_EQ(PhysicalParams(1.0, 0.5, 2.0).regime(), Regime::kParabolic);
  EXPECT_EQ(PhysicalParams(1.0, 1.0, 2.0).regime(), Regime::kParabolic);
  EXPECT_EQ(PhysicalParams(1.0, 1.5, 2.0).regime(), Regime::kDispersive);
}

TEST(Grid, SpacingAndSymmetry) {
  const Grid grid(20.0, 2048);
  EXPECT_NEAR(grid.dx() * grid.n_cells(), 40.0, 1e-12);
  EXPECT_EQ(grid.size(), 2049u);
  EXPECT_NEAR(grid.node(0), -20.0, 1e-12);
  EXPECT_NEAR(grid.node(2048), 20.0, 1e-12);
  EXPECT_EQ(grid.node(1024), 0.0);
  for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
    EXPECT_LT(grid.node(j), grid.node(j + 1));
    EXPECT_EQ(grid.node(j), -grid.node(grid.size() - 1 - j));
  }
  EXPECT_THROW(Grid(20.0, 15), ArgumentError);
  EXPECT_THROW(Grid(20.0, 8), ArgumentError);
  EXPECT_THROW(Grid(0.0, 64), ArgumentError);
}

TEST(ScalarFunctions, Pressure) {
  EXPECT_EQ(pressure(1.0, 3.7), 1.0);
  EXPECT_EQ(pressure(2.0, 2.0), 0.25);
  EXPECT_NEAR(pressure(0.5, 1.5), 2.8284271247461903, 1e-14);
  EXPECT_THROW(pressure(0.0, 2.0), DomainError);
  EXPECT_THROW(pressure(-1.0, 2.0), DomainError);
}

TEST(ScalarFunctions, Phi) {
  EXPECT_EQ(phi(1.0, 2.0), 0.0);
  EXPECT_DOUBLE_EQ(phi(2.0, 2.0), 0.5);
  EXPECT_NEAR(phi(std::exp(1.0), 1.0), std::exp(1.0) - 2.0, 1e-15);
  EXPECT_THROW(phi(0.0, 2.0), DomainError);
}

TEST(ScalarFunctions, PhiIsNonnegativeAndConvex) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> log_v(-4.0, 4.0);
  for (double gamma : {1.0, 1.4, 2.0, 3.0}) {
    EXPECT_EQ(phi(1.0, gamma), 0.0);
    for (int i = 0; i < 500; ++i) {
      const double a = std::exp(log_v(rng));
      const double b = std::exp(log_v(rng));
      EXPECT_GE(phi(a, gamma), 0.0);
      const double mid = phi(0.5 * (a + b), gamma);
      EXPECT_LE(mid, 0.5 * (phi(a, gamma) + phi(b, gamma)) + 1e-12 * (1.0 + mid));
    }
  }
}

TEST(ScalarFunctions, CPairExamples) {
  auto c = c_pair(1.0, 1.0);
  EXPECT_EQ(c.plus, 1.0);
  EXPECT_EQ(c.minus, 1.0);
  c = c_pair(1.0, 0.0);
  EXPECT_EQ(c.plus, 2.0);
  EXPECT_EQ(c.minus, 0.0);
  c = c_pair(1.0, 0.6);
  EXPECT_NEAR(c.plus, 1.8, 1e-15);
  EXPECT_NEAR(c.minus, 0.2, 1e-15);
  EXPECT_THROW(c_pair(1.0, 1.0000001), RegimeError);
}

TEST(ScalarFunctions, CPairProductAndSum) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double nu = 1e-3 + 10.0 * unit(rng);
    const double eps = nu * unit(rng);
    const auto c = c_pair(nu, eps);
    if (eps > 0.0) {
      EXPECT_NEAR(c.plus * c.minus / (eps * eps), 1.0, 1e-12);
    }
    EXPECT_NEAR((c.plus + c.minus) / (2.0 * nu), 1.0, 1e-12);
  }
}

TEST(ScalarFunctions, EffectivePressureBranches) {
  EXPECT_EQ(f_effective(1.0, 0.3, 2.0), 0.0);
  EXPECT_DOUBLE_EQ(f_effective(1.0, 0.5, 3.0), 3.0);
  EXPECT_DOUBLE_EQ(f_effective(2.0, 1.0, 1.0), -1.0);
  EXPECT_DOUBLE_EQ(f_effective(std::exp(1.0), 1.0, 2.0), -1.0);
  EXPECT_THROW(f_effective(0.0, 1.0, 2.0), DomainError);
}

TEST(Transforms, ConstantStateMapsToZero) {
  const Grid grid(10.0, 64);
  const PhysicalParams params(1.0, 0.5, 2.0);
  const State s = State::equilibrium(grid);
  for (double x : to_xi(s, params, grid).xi) EXPECT_EQ(x, 0.0);
  for (double x : to_omega(s, params, grid).omega) EXPECT_EQ(x, 0.0);
}

TEST(Transforms, XiMatchesIndependentStencil) {
  const Grid grid(20.0, 512);
  const PhysicalParams params(1.0, 0.6, 2.0);
  const State s = gauss_state(grid, 0.3, 0.2, 2.0);
  const XiState xi = to_xi(s, params, grid);
  const std::vector<double> vx = oracle::central(s.v, 1.0, grid.dx());
  for (std::size_t j = 0; j < grid.size(); ++j)
    EXPECT_NEAR(xi.xi[j], s.u[j] - 1.8 * vx[j] / (s.v[j] * s.v[j]), 1e-14);
  // interior node x = 1.25: closed form u - c+ v_x/v^2 within O(dx^2)
  const std::size_t j = 256 + 16;
  const double x = grid.node(j);
  const auto g = oracle::Gauss{2.0}.at(x);
  const double v = 1.0 + 0.3 * g[0];
  EXPECT_NEAR(xi.xi[j], 0.2 * g[0] - 1.8 * 0.3 * g[1] / (v * v), 5e-4);
}

TEST(Transforms, OmegaMatchesIndependentStencil) {
  const Grid grid(20.0, 512);
  const PhysicalParams params(0.7, 0.2, 2.0);
  const State s = gauss_state(grid, 0.3, 0.2, 2.0);
  const OmegaState w = to_omega(s, params, grid);
  const std::vector<double> vx = oracle::central(s.v, 1.0, grid.dx());
  for (std::size_t j = 0; j < grid.size(); ++j)
    EXPECT_NEAR(w.omega[j], s.u[j] - 1.4 * vx[j] / (s.v[j] * s.v[j]), 1e-14);
}

TEST(Transforms, XiEqualsOmegaWithoutDispersion) {
  const Grid grid(20.0, 256);
  const PhysicalParams params(0.8, 0.0, 2.0);
  const State s = gauss_state(grid, 0.4, -0.3, 1.5);
  EXPECT_EQ(to_xi(s, params, grid).xi, to_omega(s, params, grid).omega);
}

TEST(Transforms, XiRequiresParabolicRegime) {
  const Grid grid(10.0, 64);
  const State s = State::equilibrium(grid);
  EXPECT_THROW(to_xi(s, PhysicalParams(1.0, 2.0, 2.0), grid), RegimeError);
  EXPECT_NO_THROW(to_omega(s, PhysicalParams(1.0, 2.0, 2.0), grid));
}

TEST(Transforms, RoundTripsOnRandomPositiveStates) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Grid grid(15.0, 256);
    const auto vp = oracle::RandomProfile::draw(rng, 15.0, 0.6);
    const auto up = oracle::RandomProfile::draw(rng, 15.0, 1.0);
    State s = State::equilibrium(grid);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      s.v[j] = 1.0 + vp(grid.node(j));
      s.u[j] = up(grid.node(j));
    }
    const double nu = 0.1 + unit(rng);
    const PhysicalParams params(nu, nu * unit(rng), 1.0 + 2.0 * unit(rng));
    const State back_xi = from_xi(to_xi(s, params, grid), params, grid);
    const State back_omega = from_omega(to_omega(s, params, grid), params, grid);
    EXPECT_EQ(back_xi.v, s.v);
    EXPECT_LE(max_rel(back_xi.u, s.u), 1e-12);
    EXPECT_LE(max_rel(back_omega.u, s.u), 1e-12);
  }
}

TEST(PhiLevel, ZeroLevelIsDoubleRootAtOne) {
  const auto r = solve_phi_level(0.0);
  EXPECT_EQ(r.alpha, 1.0);
  EXPECT_EQ(r.beta, 1.0);
}

TEST(PhiLevel, KnownUpperRoot) {
  const double c = std::exp(1.0) - 2.0;
  const auto r = solve_phi_level(c);
  EXPECT_NEAR(r.beta, std::exp(1.0), 1e-10);
  // bisection oracle on (1e-12, 1], frozen: 0.22452829808295732
  EXPECT_NEAR(oracle::bisect_level(c, 1e-12, 1.0), 0.22452829808295732, 1e-15);
  EXPECT_NEAR(r.alpha, 0.22452829808295732, 1e-12);
}

TEST(PhiLevel, RootsBracketOneAndSolveTheLevel) {
  for (double c : {1e-8, 0.01, 0.1, 0.5, 1.0, 3.0, 10.0, 20.0}) {
    const auto r = solve_phi_level(c);
    EXPECT_LE(r.alpha, 1.0);
    EXPECT_GE(r.beta, 1.0);
    EXPECT_LE(std::abs(r.alpha - 1.0 - std::log(r.alpha) - c), 1e-10) << c;
    EXPECT_LE(std::abs(r.beta - 1.0 - std::log(r.beta) - c), 1e-10) << c;
  }
  EXPECT_THROW(solve_phi_level(-0.1), ArgumentError);
}
