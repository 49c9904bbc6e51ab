#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qns/core/errors.hpp"
#include "qns/core/grid.hpp"
#include "qns/core/params.hpp"

namespace qns {

enum class Formulation { kPrimitive, kXi, kOmega };

inline std::string_view to_string(Formulation f) {
  switch (f) {
    case Formulation::kPrimitive: return "primitive";
    case Formulation::kXi: return "xi";
    case Formulation::kOmega: return "omega";
  }
  return "unknown";
}

inline Formulation parse_formulation(std::string_view name) {
  if (name == "primitive") return Formulation::kPrimitive;
  if (name == "xi") return Formulation::kXi;
  if (name == "omega") return Formulation::kOmega;
  throw ArgumentError("unknown formulation '" + std::string(name) + "'");
}

enum class Family { kGaussBump, kDoubleBump };

inline std::string_view to_string(Family f) { return f == Family::kGaussBump ? "gauss-bump" : "double-bump"; }

inline Family parse_family(std::string_view name) {
  if (name == "gauss-bump") return Family::kGaussBump;
  if (name == "double-bump") return Family::kDoubleBump;
  throw ArgumentError("unknown initial-data family '" + std::string(name) + "'");
}

/// v0 = 1 + A exp(-x^2/sigma^2), u0 = B exp(-x^2/sigma^2); the double bump
/// superposes two such profiles centred at +-center.
struct InitialDataSpec {
  Family family = Family::kGaussBump;
  double amplitude = 0.0;  ///< A
  double velocity = 0.0;   ///< B
  double sigma = 1.0;
  double center = 5.0;     ///< double-bump only
};

struct SimConfig {
  PhysicalParams params{1.0, 0.0, 2.0};
  double half_width = 20.0;
  int n_cells = 1024;
  Formulation formulation = Formulation::kPrimitive;
  InitialDataSpec initial;
  double t_final = 1.0;
  double cfl = 0.9;
  /// <= 0 means: snapshots at t = 0 and t_final only.
  double snapshot_interval = 0.0;
  /// Explicit snapshot times; overrides snapshot_interval when non-empty.
  std::vector<double> snapshot_times;
  double positivity_floor = 1e-8;
  double boundary_tol = 1e-6;
  /// Upper bound on the step size, shared by runs that must use one dt sequence.
  std::optional<double> max_dt;
  std::size_t max_steps = 50'000'000;

  Grid grid() const { return {half_width, n_cells}; }

  void validate() const {
    (void)grid();
    if (!(t_final >= 0.0)) throw ArgumentError("t_final must be >= 0");
    if (!(cfl > 0.0 && cfl <= 1.0)) throw ArgumentError("cfl must lie in (0, 1]");
    if (!(positivity_floor >= 0.0)) throw ArgumentError("positivity_floor must be >= 0");
    if (!(boundary_tol >= 0.0)) throw ArgumentError("boundary_tol must be >= 0");
    if (!(initial.sigma > 0.0)) throw ArgumentError("sigma must be > 0");
    if (max_dt && !(*max_dt > 0.0)) throw ArgumentError("max_dt must be > 0");
    if (formulation == Formulation::kXi && params.eps() > params.nu())
      throw RegimeError("formulation=xi requires eps <= nu; for eps > nu the xi system is complex");
    for (std::size_t i = 0; i < snapshot_times.size(); ++i) {
      if (!(snapshot_times[i] >= 0.0 && snapshot_times[i] <= t_final))
        throw ArgumentError("snapshot times must lie in [0, t_final]");
      if (i > 0 && !(snapshot_times[i] > snapshot_times[i - 1]))
        throw ArgumentError("snapshot times must be strictly increasing");
    }
  }
};

}  // namespace qns
