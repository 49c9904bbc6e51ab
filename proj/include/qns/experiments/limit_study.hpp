#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qns/core/errors.hpp"
#include "qns/discretization/stencil.hpp"
#include "qns/experiments/rate_fit.hpp"
#include "qns/integrator/advance.hpp"
#include "qns/integrator/stepper.hpp"

namespace qns {

struct LimitStudyConfig {
  SimConfig base;                     ///< formulation must be primitive
  std::vector<double> eps_list;       ///< strictly decreasing, each in (0, nu]
  double compare_time = 0.5;          ///< t*
  std::vector<int> derivative_orders{0, 1, 2, 3};

  void validate() const {
    base.validate();
    if (base.formulation != Formulation::kPrimitive) throw ConfigError("limit study requires formulation=primitive");
    if (eps_list.empty()) throw ConfigError("limit study needs a non-empty eps_list");
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
      if (!(eps_list[i] > 0.0)) throw ConfigError("eps_list entries must be > 0");
      if (eps_list[i] > base.params.nu()) throw ConfigError("eps_list entry exceeds nu");
      if (i > 0 && !(eps_list[i] < eps_list[i - 1])) throw ConfigError("eps_list must be strictly decreasing");
    }
    if (!(compare_time > 0.0 && compare_time <= base.t_final)) throw ConfigError("compare time must lie in (0, t_final]");
    if (derivative_orders.empty()) throw ConfigError("derivative_orders must not be empty");
    for (int k : derivative_orders)
      if (k < 0 || k > 3) throw ConfigError("derivative orders must lie in {0,1,2,3}");
  }
};

struct LimitErrorRow {
  double eps;
  int k;
  double error;
};

/// Rate fit for one derivative order; `fit` is empty when some error vanished.
struct OrderFit {
  int k;
  std::optional<RateFit> fit;
  bool zero_error = false;
};

struct LimitStudyResult {
  std::vector<LimitErrorRow> rows;
  std::vector<OrderFit> fits;
  double shared_dt = 0.0;
  State reference;                  ///< eps = 0 solution at t*
  std::map<double, State> solutions;  ///< eps -> solution at t*
  std::vector<std::string> warnings;

  double error(double eps, int k) const {
    for (const LimitErrorRow& r : rows)
      if (r.eps == eps && r.k == k) return r.error;
    throw ArgumentError("no error recorded for the requested (eps, k)");
  }
  const OrderFit& fit_for(int k) const {
    for (const OrderFit& f : fits)
      if (f.k == k) return f;
    throw ArgumentError("no fit recorded for order " + std::to_string(k));
  }
};

/// Discrete L2 of the k-th derivative of (v - v_ref) plus that of (u - u_ref).
inline double limit_error(const State& s, const State& ref, int k, const Grid& grid) {
  const std::size_t n = s.v.size();
  Field dv(n);
  Field du(n);
  for (std::size_t j = 0; j < n; ++j) {
    dv[j] = s.v[j] - ref.v[j];
    du[j] = s.u[j] - ref.u[j];
  }
  if (k > 0) {
    dv = derivative(dv, 0.0, grid.dx(), k);
    du = derivative(du, 0.0, grid.dx(), k);
  }
  auto l2 = [&](Field f) {
    for (double& x : f) x *= x;
    return std::sqrt(trapezoid(f, grid.dx()));
  };
  return l2(std::move(dv)) + l2(std::move(du));
}

/// Errors and per-order fits from already computed solutions at t*.
inline void tabulate_limit_errors(const std::vector<std::pair<double, State>>& runs, const State& reference,
                                  const std::vector<int>& orders, const Grid& grid, LimitStudyResult& out) {
  for (int k : orders) {
    std::vector<RatePoint> points;
    bool zero = false;
    for (const auto& [eps, s] : runs) {
      const double e = limit_error(s, reference, k, grid);
      out.rows.push_back({eps, k, e});
      points.push_back({eps, e});
      zero = zero || !(e > 0.0);
    }
    OrderFit f{k, std::nullopt, zero};
    if (!zero && points.size() >= 3) f.fit = rate_fit(points);
    out.fits.push_back(f);
  }
}

/// Step size shared by every run of an eps sweep: the smallest stability bound over
/// the sweep (eps = 0 included) on the initial data, with headroom for v_min drifting down.
inline double shared_step(const SimConfig& base, const std::vector<double>& eps_list, double headroom = 0.8) {
  const Grid grid = base.grid();
  const State s0 = initial_data(base.initial, grid);
  double dt = stable_dt(s0, base.params.with_eps(0.0), grid, base.cfl);
  for (double eps : eps_list) dt = std::min(dt, stable_dt(s0, base.params.with_eps(eps), grid, base.cfl));
  return headroom * dt;
}

/// Run the eps = 0 reference and every eps of the sweep to t*, then measure the
/// gap per eps and derivative order and fit its exponent in eps.
inline LimitStudyResult limit_study(const LimitStudyConfig& cfg) {
  cfg.validate();
  const Grid grid = cfg.base.grid();
  LimitStudyResult out;
  out.shared_dt = shared_step(cfg.base, cfg.eps_list);

  auto run = [&](double eps) {
    SimConfig c = cfg.base;
    c.params = cfg.base.params.with_eps(eps);
    c.t_final = cfg.compare_time;
    c.snapshot_interval = 0.0;
    c.snapshot_times.clear();
    c.max_dt = out.shared_dt;
    return advance(c);
  };

  Trajectory ref;
  try {
    ref = run(0.0);
  } catch (const Error& e) {
    throw StudyError(std::string("reference run (eps = 0) failed: ") + e.what(), 0.0);
  }
  out.reference = ref.final_snapshot().state;
  for (const std::string& w : ref.warnings) out.warnings.push_back("eps=0: " + w);

  std::vector<std::future<Trajectory>> pending;
  for (double eps : cfg.eps_list) pending.push_back(std::async(std::launch::async, run, eps));
  std::vector<std::pair<double, State>> runs;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const double eps = cfg.eps_list[i];
    Trajectory t;
    try {
      t = pending[i].get();
    } catch (const Error& e) {
      for (std::size_t k = i + 1; k < pending.size(); ++k) pending[k].wait();
      throw StudyError("run with eps = " + std::to_string(eps) + " failed: " + e.what(), eps);
    }
    for (const std::string& w : t.warnings) out.warnings.push_back("eps=" + std::to_string(eps) + ": " + w);
    runs.emplace_back(eps, t.final_snapshot().state);
    out.solutions.emplace(eps, t.final_snapshot().state);
  }
  tabulate_limit_errors(runs, out.reference, cfg.derivative_orders, grid, out);
  return out;
}

}  // namespace qns
