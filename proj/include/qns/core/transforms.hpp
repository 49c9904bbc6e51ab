#pragma once

#include <cstddef>

#include "qns/core/params.hpp"
#include "qns/core/scalar_functions.hpp"
#include "qns/core/state.hpp"
#include "qns/discretization/stencil.hpp"

namespace qns {

namespace detail {

// Nodal v_x / v^2 with the solver's first-derivative stencil (ghost v = 1).
inline Field gradient_shift(const Field& v, const Grid& grid) {
  require_positive(v, "effective velocity");
  Field q = derivative(v, 1.0, grid.dx(), 1);
  for (std::size_t j = 0; j < q.size(); ++j) q[j] /= v[j] * v[j];
  return q;
}

inline Field shifted(const Field& w, const Field& q, double coeff) {
  Field out(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) out[j] = w[j] + coeff * q[j];
  return out;
}

}  // namespace detail

inline XiState to_xi(const State& s, const PhysicalParams& params, const Grid& grid) {
  require_shape(s, grid, "to_xi");
  const double c_plus = c_pair(params.nu(), params.eps()).plus;
  return {s.v, detail::shifted(s.u, detail::gradient_shift(s.v, grid), -c_plus)};
}

inline State from_xi(const XiState& s, const PhysicalParams& params, const Grid& grid) {
  require_shape(s, grid, "from_xi");
  const double c_plus = c_pair(params.nu(), params.eps()).plus;
  return {s.v, detail::shifted(s.xi, detail::gradient_shift(s.v, grid), c_plus)};
}

inline OmegaState to_omega(const State& s, const PhysicalParams& params, const Grid& grid) {
  require_shape(s, grid, "to_omega");
  return {s.v, detail::shifted(s.u, detail::gradient_shift(s.v, grid), -2.0 * params.nu())};
}

inline State from_omega(const OmegaState& s, const PhysicalParams& params, const Grid& grid) {
  require_shape(s, grid, "from_omega");
  return {s.v, detail::shifted(s.omega, detail::gradient_shift(s.v, grid), 2.0 * params.nu())};
}

}  // namespace qns
