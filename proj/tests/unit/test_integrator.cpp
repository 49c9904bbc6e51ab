#include <cmath>

#include <gtest/gtest.h>

#include "qns/integrator/advance.hpp"
#include "qns/integrator/initial_data.hpp"
#include "qns/integrator/stepper.hpp"

using namespace qns;

namespace {

SimConfig bump_config(int n, double eps, double t_final) {
  SimConfig c;
  c.params = PhysicalParams(1.0, eps, 2.0);
  c.half_width = 20.0;
  c.n_cells = n;
  c.initial = {Family::kGaussBump, 0.3, 0.2, 2.0};
  c.t_final = t_final;
  return c;
}

double l2_difference_on_coarse(const State& coarse, const State& fine, double dx) {
  double s = 0.0;
  for (std::size_t j = 0; j < coarse.v.size(); ++j) {
    const double dv = coarse.v[j] - fine.v[2 * j];
    const double du = coarse.u[j] - fine.u[2 * j];
    s += dv * dv + du * du;
  }
  return std::sqrt(s * dx);
}

}  // namespace

TEST(InitialData, EquilibriumWhenAmplitudesVanish) {
  const Grid grid(10.0, 64);
  const State s = initial_data({Family::kGaussBump, 0.0, 0.0, 2.0}, grid);
  for (double v : s.v) EXPECT_EQ(v, 1.0);
  for (double u : s.u) EXPECT_EQ(u, 0.0);
}

TEST(InitialData, GaussBumpValues) {
  const Grid grid(20.0, 1024);
  const State s = initial_data({Family::kGaussBump, 0.3, 0.2, 2.0}, grid);
  EXPECT_DOUBLE_EQ(s.v[512], 1.3);
  EXPECT_DOUBLE_EQ(s.u[512], 0.2);
  EXPECT_LE(s.v.front() - 1.0, std::exp(-100.0));
  EXPECT_LE(s.v.back() - 1.0, std::exp(-100.0));
}

TEST(InitialData, DoubleBumpSuperposition) {
  const Grid grid(20.0, 1024);  // dx = 5/128, so x = +-5 are nodes 384 and 640
  const State s = initial_data({Family::kDoubleBump, 0.5, 0.1, 2.0, 5.0}, grid);
  const double expected = 1.0 + 0.5 * (1.0 + std::exp(-100.0 / 4.0));
  EXPECT_NEAR(s.v[384], expected, 1e-15);
  EXPECT_NEAR(s.v[640], expected, 1e-15);
  EXPECT_NEAR(s.v[512], 1.0 + 0.5 * 2.0 * std::exp(-25.0 / 4.0), 1e-15);
}

TEST(InitialData, RejectsAmplitudeAtOrBelowMinusOne) {
  const Grid grid(10.0, 64);
  EXPECT_THROW(initial_data({Family::kGaussBump, -1.0, 0.0, 1.0}, grid), ArgumentError);
  EXPECT_THROW(initial_data({Family::kGaussBump, -1.5, 0.0, 1.0}, grid), ArgumentError);
}

TEST(StableDt, AcceptanceConfigRegressionValue) {
  // nu=1, eps=0.1, gamma=2, N=2048, L=20, A=0.3: v_min = 1 (far field), dx = 40/2048.
  // viscous dx^2/8 = 4.76837158203125e-05 < dispersive dx^2/0.4 < acoustic dx/sqrt(2).
  const Grid grid(20.0, 2048);
  const State s = initial_data({Family::kGaussBump, 0.3, 0.2, 2.0}, grid);
  EXPECT_DOUBLE_EQ(stable_dt(s, PhysicalParams(1.0, 0.1, 2.0), grid, 1.0), 4.76837158203125e-05);
  EXPECT_DOUBLE_EQ(stable_dt(s, PhysicalParams(1.0, 0.1, 2.0), grid, 0.5), 0.5 * 4.76837158203125e-05);
}

TEST(StableDt, ViscousClauseDominatesForLargeViscosity) {
  const Grid grid(10.0, 256);
  const State s = State::equilibrium(grid);
  const double dx2 = grid.dx() * grid.dx();
  EXPECT_DOUBLE_EQ(stable_dt(s, PhysicalParams(100.0, 0.5, 2.0), grid, 0.9), 0.9 * dx2 / 800.0);
}

TEST(StableDt, IndependentOfEpsWithoutDispersion) {
  const Grid grid(10.0, 256);
  const State s = initial_data({Family::kGaussBump, -0.4, 0.2, 1.0}, grid);
  const double a = stable_dt(s, PhysicalParams(1.0, 0.0, 2.0), grid, 1.0);
  const double vmin = min_of(s.v);
  EXPECT_DOUBLE_EQ(a, std::min(grid.dx() * grid.dx() * vmin * vmin / 8.0, grid.dx() / std::sqrt(2.0 * std::pow(vmin, -3.0))));
  EXPECT_GT(a, 0.0);
  // a large eps shrinks the step through the dispersive clause
  EXPECT_LT(stable_dt(s, PhysicalParams(1.0, 50.0, 2.0), grid, 1.0), a);
}

TEST(Rk4, EquilibriumIsFixedPoint) {
  const Grid grid(10.0, 64);
  const PhysicalParams params(1.0, 0.5, 2.0);
  const State s = State::equilibrium(grid);
  const State next = rk4_step([&](const State& y, double, Tendency& k) { k = rhs_primitive(y, params, grid); }, s, 0.1);
  EXPECT_EQ(next.v, s.v);
  EXPECT_EQ(next.u, s.u);
}

TEST(Rk4, ExactForCubicInTimeForcing) {
  // y' = 1 + t + t^2 + t^3 is integrated exactly by one RK4 step.
  State s{Field(17, 1.0), Field(17, 0.0)};
  const auto rhs = [](const State&, double t, Tendency& k) {
    k.dv.assign(17, 0.0);
    k.dw.assign(17, 1.0 + t + t * t + t * t * t);
  };
  const double dt = 0.3;
  const State next = rk4_step(rhs, s, dt, 0.5);
  auto antiderivative = [](double t) { return t + t * t / 2 + t * t * t / 3 + t * t * t * t / 4; };
  for (double u : next.u) EXPECT_NEAR(u, antiderivative(0.8) - antiderivative(0.5), 1e-15);
}

TEST(Rk4, StepDoublingShowsFifthOrderLocalError) {
  const Grid grid(20.0, 256);
  const PhysicalParams params(1.0, 0.25, 2.0);
  const State s0 = initial_data({Family::kGaussBump, 0.3, 0.2, 2.0}, grid);
  const auto rhs = [&](const State& y, double, Tendency& k) { k = rhs_primitive(y, params, grid); };
  auto defect = [&](double dt) {
    const State one = rk4_step(rhs, s0, dt);
    const State two = rk4_step(rhs, rk4_step(rhs, s0, 0.5 * dt), 0.5 * dt);
    double d = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) d = std::max({d, std::abs(one.v[j] - two.v[j]), std::abs(one.u[j] - two.u[j])});
    return d;
  };
  const double dt = stable_dt(s0, params, grid, 1.0);
  const double ratio = defect(dt) / defect(0.5 * dt);
  EXPECT_GE(ratio, 16.0 * 0.9);
  EXPECT_LE(ratio, 32.0 * 1.1);
}

TEST(Rk4, PositivityFloorViolationReportsNodeAndTime) {
  const Grid grid(10.0, 64);
  State s = State::equilibrium(grid);
  const auto rhs = [](const State& y, double, Tendency& k) {
    k.dv.assign(y.v.size(), 0.0);
    k.dw.assign(y.v.size(), 0.0);
    k.dv[9] = -10.0;
  };
  try {
    (void)rk4_step(rhs, s, 0.25, 3.0, 1e-8);
    FAIL() << "expected StepError";
  } catch (const StepError& e) {
    EXPECT_EQ(e.node(), 9u);
    EXPECT_DOUBLE_EQ(e.time(), 3.125);
  }
}

TEST(Advance, ZeroFinalTimeGivesInitialSnapshotOnly) {
  SimConfig c = bump_config(256, 0.25, 0.0);
  const Trajectory traj = advance(c);
  ASSERT_EQ(traj.snapshots.size(), 1u);
  EXPECT_EQ(traj.snapshots[0].t, 0.0);
  EXPECT_EQ(traj.snapshots[0].state.v, initial_data(c.initial, c.grid()).v);
  EXPECT_EQ(traj.step_count, 0u);
}

TEST(Advance, EquilibriumStaysAtEquilibrium) {
  SimConfig c = bump_config(128, 0.25, 1.0);
  c.initial = {Family::kGaussBump, 0.0, 0.0, 2.0};
  c.snapshot_interval = 0.25;
  for (Formulation f : {Formulation::kPrimitive, Formulation::kXi, Formulation::kOmega}) {
    c.formulation = f;
    const Trajectory traj = advance(c);
    ASSERT_EQ(traj.snapshots.size(), 5u);
    for (const Snapshot& snap : traj.snapshots) {
      for (double v : snap.state.v) EXPECT_EQ(v, 1.0);
      for (double u : snap.state.u) EXPECT_EQ(u, 0.0);
    }
    EXPECT_EQ(traj.cumulative_dissipation, 0.0);
  }
}

TEST(Advance, SnapshotScheduleLandsExactly) {
  SimConfig c = bump_config(128, 0.25, 1.0);
  c.snapshot_interval = 0.3;
  const Trajectory traj = advance(c);
  const std::vector<double> expected{0.0, 0.3, 0.6, 0.8999999999999999, 1.0};
  ASSERT_EQ(traj.snapshots.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(traj.snapshots[i].t, expected[i]);
  for (std::size_t i = 1; i < traj.snapshots.size(); ++i) {
    EXPECT_GT(traj.snapshots[i].t, traj.snapshots[i - 1].t);
    EXPECT_GE(traj.snapshots[i].dissipation_cum, traj.snapshots[i - 1].dissipation_cum);
  }
  EXPECT_GT(traj.dt.min, 0.0);
  EXPECT_GE(traj.v_min_observed, c.positivity_floor);
}

TEST(Advance, GaussBumpRegression) {
  // Reference from an N = 4096 run of the same configuration.
  constexpr double kUMax = 0.181521708584368;
  constexpr double kVMax = 1.2586002431492729;
  const Trajectory traj = advance(bump_config(1024, 0.25, 1.0));
  const State& s = traj.final_snapshot().state;
  EXPECT_NEAR(max_of(s.u), kUMax, 1e-3 * kUMax);
  EXPECT_NEAR(max_of(s.v), kVMax, 1e-3 * kVMax);
}

TEST(Advance, GridRefinementConvergesAtSecondOrder) {
  auto final_state = [](int n) { return advance(bump_config(n, 0.25, 0.25)).final_snapshot().state; };
  const State s1 = final_state(256);
  const State s2 = final_state(512);
  const State s4 = final_state(1024);
  const double e1 = l2_difference_on_coarse(s1, s2, Grid(20.0, 256).dx());
  const double e2 = l2_difference_on_coarse(s2, s4, Grid(20.0, 512).dx());
  EXPECT_GE(e1 / e2, 3.0);
}

TEST(Advance, BoundaryContaminationIsAWarning) {
  SimConfig c = bump_config(256, 0.25, 0.5);
  c.half_width = 6.0;
  c.boundary_tol = 1e-9;
  const Trajectory traj = advance(c);
  ASSERT_FALSE(traj.warnings.empty());
  EXPECT_NE(traj.warnings.front().find("boundary contamination"), std::string::npos);
}

TEST(Advance, InitialDataBelowFloorIsAStepError) {
  SimConfig c = bump_config(128, 0.25, 0.1);
  c.initial.amplitude = -0.999;
  c.positivity_floor = 0.01;
  EXPECT_THROW(advance(c), StepError);
}

TEST(Advance, RejectsXiInDispersiveRegime) {
  SimConfig c = bump_config(128, 2.0, 0.1);
  c.formulation = Formulation::kXi;
  EXPECT_THROW(advance(c), RegimeError);
}

TEST(Advance, SharedStepCapIsRespected) {
  SimConfig c = bump_config(128, 0.25, 0.1);
  c.max_dt = 1e-4;
  const Trajectory traj = advance(c);
  EXPECT_LE(traj.dt.max, 1e-4 * (1.0 + 1e-6));
  EXPECT_EQ(traj.step_count, 1000u);
}
