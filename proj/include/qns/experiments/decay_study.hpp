#pragma once

#include <cstddef>
#include <vector>

#include "qns/core/errors.hpp"
#include "qns/diagnostics/record.hpp"
#include "qns/integrator/advance.hpp"

namespace qns {

struct DecaySample {
  double t;
  DecayNorms norms;
  double dissipation_rate;
};

struct DecaySeries {
  std::vector<DecaySample> samples;
  /// sup_norm or grad_norm grew between consecutive samples in the later half of the times
  bool non_monotone_tail = false;
  std::vector<std::string> warnings;
};

inline DecaySeries decay_study(const SimConfig& config, const std::vector<double>& sample_times) {
  if (sample_times.empty()) throw ArgumentError("decay_study: no sample times");
  for (std::size_t i = 0; i < sample_times.size(); ++i) {
    if (!(sample_times[i] >= 0.0)) throw ArgumentError("decay_study: sample times must be >= 0");
    if (i > 0 && !(sample_times[i] > sample_times[i - 1]))
      throw ArgumentError("decay_study: sample times must be increasing");
  }
  SimConfig c = config;
  if (sample_times.back() > c.t_final) throw ArgumentError("decay_study: sample time beyond t_final");
  c.t_final = sample_times.back();
  c.snapshot_times = sample_times;
  c.snapshot_interval = 0.0;
  const Grid grid = c.grid();
  const Trajectory traj = advance(c);

  DecaySeries out;
  out.warnings = traj.warnings;
  for (const Snapshot& snap : traj.snapshots) {
    bool requested = false;
    for (double t : sample_times) requested = requested || t == snap.t;
    if (!requested) continue;
    out.samples.push_back({snap.t, decay_norms(snap.state, grid), dissipation_rate(snap.state, c.params, grid)});
  }
  const std::size_t half = out.samples.size() / 2;
  for (std::size_t i = std::max<std::size_t>(half, 1); i < out.samples.size(); ++i) {
    const DecayNorms& a = out.samples[i - 1].norms;
    const DecayNorms& b = out.samples[i].norms;
    if (b.sup_norm > a.sup_norm || b.grad_norm > a.grad_norm) out.non_monotone_tail = true;
  }
  return out;
}

}  // namespace qns
