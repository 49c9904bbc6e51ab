#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>

#include "qns/core/params.hpp"
#include "qns/core/scalar_functions.hpp"
#include "qns/core/state.hpp"
#include "qns/discretization/stencil.hpp"

namespace qns {

/// Time derivatives of (v, w) where w is u, xi or omega depending on the formulation.
struct Tendency {
  Field dv;
  Field dw;
};

/// Scratch arrays reused across right-hand-side evaluations of one trajectory.
struct RhsWorkspace {
  Field a, b, c, d, e;

  void resize(std::size_t n) {
    for (Field* f : {&a, &b, &c, &d, &e}) f->resize(n);
  }
};

namespace detail {

// v^(-gamma) given 1/v, avoiding pow for the common exponents.
inline double inverse_power(double inv_v, double v, double gamma) {
  if (gamma == 1.0) return inv_v;
  if (gamma == 2.0) return inv_v * inv_v;
  if (gamma == 3.0) return inv_v * inv_v * inv_v;
  return std::pow(v, -gamma);
}

inline void prepare(std::span<const double> v, std::size_t n, Tendency& out, RhsWorkspace& ws, const char* who) {
  require_positive(v, who);
  out.dv.resize(n);
  out.dw.resize(n);
  ws.resize(n);
}

// Quantum dispersion flux -v_xx/v^4 + 2 v_x^2/v^5 into `flux`, given v_x in `vx`.
inline void dispersion_flux(std::span<const double> v, std::span<const double> vx, double dx, std::span<double> vxx,
                            std::span<double> flux) {
  apply_derivative(v, 1.0, dx, 2, vxx);
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double iv = 1.0 / v[j];
    const double iv4 = (iv * iv) * (iv * iv);
    flux[j] = -vxx[j] * iv4 + 2.0 * vx[j] * vx[j] * iv4 * iv;
  }
}

}  // namespace detail

/// Primitive Lagrangian system:
///   v_t = u_x
///   u_t = -(v^-gamma)_x + 2 nu (u_x / v^2)_x + eps^2 (-v_xx/v^4 + 2 v_x^2/v^5)_x
/// The three fluxes are summed nodally and differentiated once. For eps == 0 the
/// dispersive flux is never formed.
inline void rhs_primitive_into(const State& s, const PhysicalParams& params, const Grid& grid, Tendency& out,
                               RhsWorkspace& ws) {
  const std::size_t n = s.v.size();
  detail::prepare(s.v, n, out, ws, "rhs_primitive");
  const double dx = grid.dx();
  const double nu2 = 2.0 * params.nu();
  const double gamma = params.gamma();

  apply_derivative(s.u, 0.0, dx, 1, out.dv);
  Field& flux = ws.a;
  for (std::size_t j = 0; j < n; ++j) {
    const double iv = 1.0 / s.v[j];
    flux[j] = nu2 * out.dv[j] * iv * iv - detail::inverse_power(iv, s.v[j], gamma);
  }
  if (params.eps() != 0.0) {
    const double eps2 = params.eps() * params.eps();
    apply_derivative(s.v, 1.0, dx, 1, ws.b);
    detail::dispersion_flux(s.v, ws.b, dx, ws.c, ws.d);
    for (std::size_t j = 0; j < n; ++j) flux[j] += eps2 * ws.d[j];
  }
  // far field of the momentum flux is -p(1) = -1
  apply_derivative(flux, -1.0, dx, 1, out.dw);
}

/// xi formulation (requires eps <= nu):
///   v_t  = xi_x + c+ (v_x/v^2)_x
///   xi_t = -(gamma/c+) v^(1-gamma) xi + (gamma/c+) v^(1-gamma) u + c- (xi_x/v^2)_x
/// with u = xi + c+ v_x/v^2 unless `aux_u` supplies it.
inline void rhs_xi_into(const XiState& s, std::optional<std::span<const double>> aux_u, const PhysicalParams& params,
                        const Grid& grid, Tendency& out, RhsWorkspace& ws) {
  const auto [c_plus, c_minus] = c_pair(params.nu(), params.eps());
  const std::size_t n = s.v.size();
  detail::prepare(s.v, n, out, ws, "rhs_xi");
  const double dx = grid.dx();
  const double gamma = params.gamma();

  Field& u = ws.a;
  apply_derivative(s.v, 1.0, dx, 1, ws.b);
  for (std::size_t j = 0; j < n; ++j) u[j] = s.xi[j] + c_plus * ws.b[j] / (s.v[j] * s.v[j]);
  apply_derivative(u, 0.0, dx, 1, out.dv);
  if (aux_u) {
    if (aux_u->size() != n) throw ArgumentError("rhs_xi: auxiliary velocity does not match the state");
    std::copy(aux_u->begin(), aux_u->end(), u.begin());
  }

  Field& flux = ws.c;
  apply_derivative(s.xi, 0.0, dx, 1, ws.d);
  for (std::size_t j = 0; j < n; ++j) flux[j] = c_minus * ws.d[j] / (s.v[j] * s.v[j]);
  apply_derivative(flux, 0.0, dx, 1, out.dw);
  const double relax = gamma / c_plus;
  for (std::size_t j = 0; j < n; ++j) {
    const double rate = relax * s.v[j] * detail::inverse_power(1.0 / s.v[j], s.v[j], gamma);
    out.dw[j] += rate * (u[j] - s.xi[j]);
  }
}

/// omega formulation:
///   v_t     = omega_x + 2 nu (v_x/v^2)_x
///   omega_t = -(gamma/2nu) v^(1-gamma) omega + (gamma/2nu) v^(1-gamma) u + eps^2 (-v_xx/v^4 + 2 v_x^2/v^5)_x
/// with u = omega + 2 nu v_x/v^2.
inline void rhs_omega_into(const OmegaState& s, const PhysicalParams& params, const Grid& grid, Tendency& out,
                           RhsWorkspace& ws) {
  const std::size_t n = s.v.size();
  detail::prepare(s.v, n, out, ws, "rhs_omega");
  const double dx = grid.dx();
  const double nu2 = 2.0 * params.nu();
  const double gamma = params.gamma();

  Field& u = ws.a;
  Field& vx = ws.b;
  apply_derivative(s.v, 1.0, dx, 1, vx);
  for (std::size_t j = 0; j < n; ++j) u[j] = s.omega[j] + nu2 * vx[j] / (s.v[j] * s.v[j]);
  apply_derivative(u, 0.0, dx, 1, out.dv);

  if (params.eps() != 0.0) {
    const double eps2 = params.eps() * params.eps();
    detail::dispersion_flux(s.v, vx, dx, ws.c, ws.d);
    for (std::size_t j = 0; j < n; ++j) ws.d[j] *= eps2;
    apply_derivative(ws.d, 0.0, dx, 1, out.dw);
  } else {
    std::fill(out.dw.begin(), out.dw.end(), 0.0);
  }
  const double relax = gamma / nu2;
  for (std::size_t j = 0; j < n; ++j) {
    const double rate = relax * s.v[j] * detail::inverse_power(1.0 / s.v[j], s.v[j], gamma);
    out.dw[j] += rate * (u[j] - s.omega[j]);
  }
}

inline Tendency rhs_primitive(const State& s, const PhysicalParams& params, const Grid& grid) {
  require_shape(s, grid, "rhs_primitive");
  Tendency out;
  RhsWorkspace ws;
  rhs_primitive_into(s, params, grid, out, ws);
  return out;
}

inline Tendency rhs_xi(const XiState& s, const PhysicalParams& params, const Grid& grid,
                       std::optional<std::span<const double>> aux_u = std::nullopt) {
  require_shape(s, grid, "rhs_xi");
  Tendency out;
  RhsWorkspace ws;
  rhs_xi_into(s, aux_u, params, grid, out, ws);
  return out;
}

inline Tendency rhs_omega(const OmegaState& s, const PhysicalParams& params, const Grid& grid) {
  require_shape(s, grid, "rhs_omega");
  Tendency out;
  RhsWorkspace ws;
  rhs_omega_into(s, params, grid, out, ws);
  return out;
}

}  // namespace qns
