#pragma once

#include <cstddef>

#include "qns/core/params.hpp"
#include "qns/core/state.hpp"
#include "qns/discretization/stencil.hpp"

namespace qns {

/// 2 nu * int u_x^2 / v^2 dx by the trapezoid rule; `scratch` is resized as needed.
inline double dissipation_rate(const Field& v, const Field& u, const PhysicalParams& params, const Grid& grid,
                               Field& scratch) {
  require_positive(v, "dissipation_rate");
  scratch.resize(u.size());
  apply_derivative(u, 0.0, grid.dx(), 1, scratch);
  for (std::size_t j = 0; j < scratch.size(); ++j) scratch[j] = scratch[j] * scratch[j] / (v[j] * v[j]);
  return 2.0 * params.nu() * trapezoid(scratch, grid.dx());
}

inline double dissipation_rate(const State& s, const PhysicalParams& params, const Grid& grid) {
  Field scratch;
  return dissipation_rate(s.v, s.u, params, grid, scratch);
}

}  // namespace qns
