#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "qns/core/transforms.hpp"
#include "qns/diagnostics/dissipation.hpp"
#include "qns/discretization/rhs.hpp"
#include "qns/integrator/config.hpp"
#include "qns/integrator/initial_data.hpp"
#include "qns/integrator/stepper.hpp"

namespace qns {

struct Snapshot {
  double t;
  State state;
  double dissipation_cum;  ///< 2 nu int_0^t int u_x^2/v^2 dx ds at this time
};

struct DtSummary {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

struct Trajectory {
  std::vector<Snapshot> snapshots;
  double cumulative_dissipation = 0.0;
  std::size_t step_count = 0;
  DtSummary dt;
  double v_min_observed = 0.0;  ///< over every accepted step
  double v_max_observed = 0.0;
  std::vector<std::string> warnings;

  const Snapshot& final_snapshot() const { return snapshots.back(); }
};

/// Snapshot schedule: 0, the requested times, t_final (strictly increasing).
inline std::vector<double> snapshot_schedule(const SimConfig& cfg) {
  std::vector<double> times{0.0};
  if (!cfg.snapshot_times.empty()) {
    for (double t : cfg.snapshot_times)
      if (t > times.back()) times.push_back(t);
  } else if (cfg.snapshot_interval > 0.0) {
    for (long k = 1;; ++k) {
      const double t = static_cast<double>(k) * cfg.snapshot_interval;
      if (t >= cfg.t_final * (1.0 - 1e-12)) break;
      times.push_back(t);
    }
  }
  if (cfg.t_final > times.back()) times.push_back(cfg.t_final);
  return times;
}

namespace detail {

inline void check_boundary(const State& s, double t, double tol, Trajectory& traj, bool& warned) {
  if (warned) return;
  const std::size_t n = s.v.size();
  for (std::size_t j : {std::size_t{0}, std::size_t{1}, n - 2, n - 1}) {
    const double dev = std::max(std::abs(s.v[j] - 1.0), std::abs(s.u[j]));
    if (dev > tol) {
      traj.warnings.push_back("boundary contamination: far-field deviation " + std::to_string(dev) + " at node " +
                              std::to_string(j) + ", t = " + std::to_string(t));
      warned = true;
      return;
    }
  }
}

template <class S, class Rhs, class ToPrimitive>
Trajectory integrate(const SimConfig& cfg, const Grid& grid, S y, Rhs&& rhs, ToPrimitive&& to_primitive) {
  const PhysicalParams& params = cfg.params;
  const std::vector<double> times = snapshot_schedule(cfg);

  Trajectory traj;
  traj.v_min_observed = min_of(y.v);
  traj.v_max_observed = max_of(y.v);
  if (const auto j = first_nonpositive(y.v); j != y.v.size() || !(traj.v_min_observed > cfg.positivity_floor)) {
    const auto bad = static_cast<std::size_t>(std::min_element(y.v.begin(), y.v.end()) - y.v.begin());
    throw StepError("initial data below the positivity floor at node " + std::to_string(bad), bad, 0.0, y.v[bad]);
  }

  bool boundary_warned = false;
  bool dt_warned = false;
  State prim = to_primitive(y);
  Field scratch;
  double rate = dissipation_rate(prim.v, prim.u, params, grid, scratch);
  traj.snapshots.push_back({0.0, prim, 0.0});
  detail::check_boundary(prim, 0.0, cfg.boundary_tol, traj, boundary_warned);

  Rk4Stepper<S> stepper;
  double t = 0.0;
  double dt_sum = 0.0;
  traj.dt.min = std::numeric_limits<double>::infinity();
  for (std::size_t next = 1; next < times.size();) {
    const double target = times[next];
    double dt = stable_dt(y, params, grid, cfg.cfl);
    if (cfg.max_dt) {
      if (dt < *cfg.max_dt && !dt_warned) {
        traj.warnings.push_back("stability bound " + std::to_string(dt) + " below the shared step " +
                                std::to_string(*cfg.max_dt) + " at t = " + std::to_string(t));
        dt_warned = true;
      }
      dt = std::min(dt, *cfg.max_dt);
    }
    const bool lands = t + dt * (1.0 + 1e-6) >= target;
    if (lands) dt = target - t;
    if (traj.step_count >= cfg.max_steps)
      throw StepError("step budget exhausted at t = " + std::to_string(t), 0, t, min_of(y.v));

    stepper.step(rhs, y, t, dt, cfg.positivity_floor);
    t = lands ? target : t + dt;
    ++traj.step_count;
    dt_sum += dt;
    traj.dt.min = std::min(traj.dt.min, dt);
    traj.dt.max = std::max(traj.dt.max, dt);
    traj.v_min_observed = std::min(traj.v_min_observed, min_of(y.v));
    traj.v_max_observed = std::max(traj.v_max_observed, max_of(y.v));

    prim = to_primitive(y);
    const double new_rate = dissipation_rate(prim.v, prim.u, params, grid, scratch);
    traj.cumulative_dissipation += 0.5 * dt * (rate + new_rate);
    rate = new_rate;

    if (lands) {
      traj.snapshots.push_back({t, prim, traj.cumulative_dissipation});
      detail::check_boundary(prim, t, cfg.boundary_tol, traj, boundary_warned);
      ++next;
    }
  }
  if (traj.step_count > 0) {
    traj.dt.mean = dt_sum / static_cast<double>(traj.step_count);
  } else {
    traj.dt.min = 0.0;
  }
  return traj;
}

}  // namespace detail

/// Integrate the configured formulation to t_final. Snapshots are always stored as (v, u).
inline Trajectory advance(const SimConfig& cfg) {
  cfg.validate();
  const Grid grid = cfg.grid();
  const PhysicalParams& params = cfg.params;
  State s0 = initial_data(cfg.initial, grid);
  RhsWorkspace ws;

  switch (cfg.formulation) {
    case Formulation::kPrimitive:
      return detail::integrate(
          cfg, grid, std::move(s0),
          [&](const State& s, double, Tendency& k) { rhs_primitive_into(s, params, grid, k, ws); },
          [](const State& s) { return s; });
    case Formulation::kXi:
      return detail::integrate(
          cfg, grid, to_xi(s0, params, grid),
          [&](const XiState& s, double, Tendency& k) { rhs_xi_into(s, std::nullopt, params, grid, k, ws); },
          [&](const XiState& s) { return from_xi(s, params, grid); });
    case Formulation::kOmega:
      return detail::integrate(
          cfg, grid, to_omega(s0, params, grid),
          [&](const OmegaState& s, double, Tendency& k) { rhs_omega_into(s, params, grid, k, ws); },
          [&](const OmegaState& s) { return from_omega(s, params, grid); });
  }
  throw ArgumentError("unknown formulation");
}

}  // namespace qns
