#pragma once

#include <cmath>
#include <cstddef>

#include "qns/core/errors.hpp"
#include "qns/core/state.hpp"
#include "qns/integrator/config.hpp"

namespace qns {

inline State initial_data(const InitialDataSpec& spec, const Grid& grid) {
  if (!(spec.amplitude > -1.0)) throw ArgumentError("initial data: amplitude A must be > -1 so that v0 > 0");
  if (!(spec.sigma > 0.0)) throw ArgumentError("initial data: sigma must be > 0");
  const double inv_s2 = 1.0 / (spec.sigma * spec.sigma);
  auto bump = [&](double x) { return std::exp(-x * x * inv_s2); };

  State s = State::equilibrium(grid);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.node(j);
    const double shape =
        spec.family == Family::kGaussBump ? bump(x) : bump(x - spec.center) + bump(x + spec.center);
    s.v[j] = 1.0 + spec.amplitude * shape;
    s.u[j] = spec.velocity * shape;
  }
  require_positive(s.v, "initial data");
  return s;
}

}  // namespace qns
