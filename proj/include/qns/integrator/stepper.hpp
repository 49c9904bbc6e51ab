#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "qns/core/errors.hpp"
#include "qns/core/params.hpp"
#include "qns/core/state.hpp"
#include "qns/discretization/rhs.hpp"

namespace qns {

/// Explicit step bound: cfl * min(viscous, dispersive, acoustic).
///   viscous     dx^2 v_min^2 / (8 nu)
///   dispersive  dx^2 v_min^4 / (4 eps)      (absent for eps = 0)
///   acoustic    dx / c_s,  c_s = sqrt(gamma v_min^(-gamma-1))
inline double stable_dt(std::span<const double> v, const PhysicalParams& params, const Grid& grid, double cfl) {
  require_positive(v, "stable_dt");
  const double v_min = min_of(v);
  const double dx2 = grid.dx() * grid.dx();
  double dt = dx2 * v_min * v_min / (8.0 * params.nu());
  if (params.eps() > 0.0) dt = std::min(dt, dx2 * (v_min * v_min) * (v_min * v_min) / (4.0 * params.eps()));
  const double sound = std::sqrt(params.gamma() * std::pow(v_min, -params.gamma() - 1.0));
  dt = std::min(dt, grid.dx() / sound);
  return cfl * dt;
}

template <class S>
double stable_dt(const S& s, const PhysicalParams& params, const Grid& grid, double cfl) {
  return stable_dt(std::span<const double>(s.v), params, grid, cfl);
}

/// Classical four-stage Runge-Kutta on two-field states (State, XiState, OmegaState).
/// `rhs(state, t, tendency)` fills the tendency. Every stage and the result are
/// checked against the positivity floor; a violation aborts the step with a StepError.
template <class S>
class Rk4Stepper {
 public:
  template <class Rhs>
  void step(Rhs&& rhs, S& y, double t, double dt, double floor) {
    if (!(dt > 0.0)) throw ArgumentError("rk4 step size must be > 0");
    stage_ = y;
    rhs(y, t, k1_);
    axpy(y, 0.5 * dt, k1_, stage_);
    check(stage_, t + 0.5 * dt, floor);
    rhs(stage_, t + 0.5 * dt, k2_);
    axpy(y, 0.5 * dt, k2_, stage_);
    check(stage_, t + 0.5 * dt, floor);
    rhs(stage_, t + 0.5 * dt, k3_);
    axpy(y, dt, k3_, stage_);
    check(stage_, t + dt, floor);
    rhs(stage_, t + dt, k4_);

    const double w = dt / 6.0;
    Field& w2 = second(y);
    for (std::size_t j = 0; j < y.v.size(); ++j) {
      y.v[j] += w * ((k1_.dv[j] + k4_.dv[j]) + 2.0 * (k2_.dv[j] + k3_.dv[j]));
      w2[j] += w * ((k1_.dw[j] + k4_.dw[j]) + 2.0 * (k2_.dw[j] + k3_.dw[j]));
    }
    check(y, t + dt, floor);
  }

 private:
  static void axpy(const S& y, double a, const Tendency& k, S& out) {
    const Field& w = second(y);
    Field& ow = second(out);
    for (std::size_t j = 0; j < y.v.size(); ++j) {
      out.v[j] = y.v[j] + a * k.dv[j];
      ow[j] = w[j] + a * k.dw[j];
    }
  }

  static void check(const S& s, double t, double floor) {
    const Field& w = second(s);
    for (std::size_t j = 0; j < s.v.size(); ++j) {
      if (!(s.v[j] > floor) || !std::isfinite(s.v[j]) || !std::isfinite(w[j])) {
        throw StepError("positivity floor violated: v = " + std::to_string(s.v[j]) + " at node " +
                            std::to_string(j) + ", t = " + std::to_string(t),
                        j, t, s.v[j]);
      }
    }
  }

  S stage_;
  Tendency k1_, k2_, k3_, k4_;
};

/// One RK4 step from `y` at time `t`; see Rk4Stepper.
template <class S, class Rhs>
S rk4_step(Rhs&& rhs, const S& y, double dt, double t = 0.0, double floor = 0.0) {
  S out = y;
  Rk4Stepper<S> stepper;
  stepper.step(rhs, out, t, dt, floor);
  return out;
}

}  // namespace qns
