#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "qns/diagnostics/functionals.hpp"
#include "qns/integrator/advance.hpp"

namespace qns {

/// Every scalar functional at one time.
struct DiagnosticsRecord {
  double t = 0.0;
  double energy = 0.0;
  double dissipation_rate = 0.0;
  double dissipation_cum = 0.0;
  double bd_entropy = 0.0;
  double v_min = 1.0;
  double v_max = 1.0;
  double sup_eff_pressure = 0.0;
  double decay_sup = 0.0;
  double decay_grad = 0.0;
  std::array<double, 3> gl_ratios{};  ///< a = 2, 3, 4

  friend bool operator==(const DiagnosticsRecord&, const DiagnosticsRecord&) = default;
};

inline DiagnosticsRecord diagnose(const State& s, double t, double dissipation_cum, const PhysicalParams& params,
                                  const Grid& grid) {
  DiagnosticsRecord r;
  r.t = t;
  r.energy = energy(s, params, grid);
  r.dissipation_rate = dissipation_rate(s, params, grid);
  r.dissipation_cum = dissipation_cum;
  r.bd_entropy = bd_entropy(s, params, grid);
  r.v_min = min_of(s.v);
  r.v_max = max_of(s.v);
  r.sup_eff_pressure = eff_pressure_sup(s, params, grid);
  const DecayNorms d = decay_norms(s, grid);
  r.decay_sup = d.sup_norm;
  r.decay_grad = d.grad_norm;
  r.gl_ratios = gl_ratios(s, grid);
  return r;
}

inline std::vector<DiagnosticsRecord> diagnose(const Trajectory& traj, const PhysicalParams& params, const Grid& grid) {
  std::vector<DiagnosticsRecord> out;
  out.reserve(traj.snapshots.size());
  for (const Snapshot& snap : traj.snapshots)
    out.push_back(diagnose(snap.state, snap.t, snap.dissipation_cum, params, grid));
  return out;
}

/// max_t |E(t) + D_cum(t) - E(0)| / max(E(0), floor).
inline double energy_balance_residual(const Trajectory& traj, const PhysicalParams& params, const Grid& grid,
                                      double floor = 1e-14) {
  if (traj.snapshots.empty()) return 0.0;
  const double e0 = energy(traj.snapshots.front().state, params, grid);
  double worst = 0.0;
  for (const Snapshot& snap : traj.snapshots)
    worst = std::max(worst, std::abs(energy(snap.state, params, grid) + snap.dissipation_cum - e0));
  return worst / std::max(e0, floor);
}

}  // namespace qns
