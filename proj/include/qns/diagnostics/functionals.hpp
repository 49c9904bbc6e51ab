#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>

#include "qns/core/params.hpp"
#include "qns/core/scalar_functions.hpp"
#include "qns/core/state.hpp"
#include "qns/core/transforms.hpp"
#include "qns/diagnostics/dissipation.hpp"
#include "qns/discretization/stencil.hpp"

namespace qns {

namespace detail {

inline double l2_norm(const Field& f, double dx) {
  Field sq(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) sq[j] = f[j] * f[j];
  return std::sqrt(trapezoid(sq, dx));
}

}  // namespace detail

/// int Phi(v) + u^2/2 + (eps^2/2) v_x^2/v^4 dx.
inline double energy(const State& s, const PhysicalParams& params, const Grid& grid) {
  require_shape(s, grid, "energy");
  if (first_nonpositive(s.v) != s.v.size()) throw DomainError("energy: specific volume must be positive");
  const double eps2 = params.eps() * params.eps();
  const Field vx = derivative(s.v, 1.0, grid.dx(), 1);
  Field density(s.v.size());
  for (std::size_t j = 0; j < density.size(); ++j) {
    const double v2 = s.v[j] * s.v[j];
    density[j] = phi(s.v[j], params.gamma()) + 0.5 * s.u[j] * s.u[j] + 0.5 * eps2 * vx[j] * vx[j] / (v2 * v2);
  }
  return trapezoid(density, grid.dx());
}

/// Bresch-Desjardins entropy: int Phi(v) + (u - 2 nu v_x/v^2)^2 / 2 + (eps^2/2) v_x^2/v^4 dx.
inline double bd_entropy(const State& s, const PhysicalParams& params, const Grid& grid) {
  require_shape(s, grid, "bd_entropy");
  if (first_nonpositive(s.v) != s.v.size()) throw DomainError("bd_entropy: specific volume must be positive");
  const double eps2 = params.eps() * params.eps();
  const OmegaState w = to_omega(s, params, grid);
  const Field vx = derivative(s.v, 1.0, grid.dx(), 1);
  Field density(s.v.size());
  for (std::size_t j = 0; j < density.size(); ++j) {
    const double v2 = s.v[j] * s.v[j];
    density[j] = phi(s.v[j], params.gamma()) + 0.5 * w.omega[j] * w.omega[j] + 0.5 * eps2 * vx[j] * vx[j] / (v2 * v2);
  }
  return trapezoid(density, grid.dx());
}

struct GermainLeflochSides {
  double lhs;  ///< int f^a f_xx^2 dx
  double rhs;  ///< ((a-1)/3)^2 int f^(a-2) f_x^4 dx
};

/// ((a-1)/3)^2, the optimal constant of the coercivity inequality.
inline double germain_lefloch_constant(double a) {
  const double c = (a - 1.0) / 3.0;
  return c * c;
}

inline GermainLeflochSides germain_lefloch(const ScalarField& f, double a, const Grid& grid) {
  if (!(a > 1.0)) throw ArgumentError("germain_lefloch: exponent a must be > 1");
  if (f.values.size() != grid.size()) throw ArgumentError("germain_lefloch: field does not match grid");
  if (first_nonpositive(f.values) != f.values.size()) throw DomainError("germain_lefloch: f must be positive");
  const Field fx = derivative(f.values, f.far_field, grid.dx(), 1);
  const Field fxx = derivative(f.values, f.far_field, grid.dx(), 2);
  Field left(fx.size());
  Field right(fx.size());
  for (std::size_t j = 0; j < fx.size(); ++j) {
    const double fj = f.values[j];
    left[j] = std::pow(fj, a) * fxx[j] * fxx[j];
    const double fx2 = fx[j] * fx[j];
    right[j] = std::pow(fj, a - 2.0) * fx2 * fx2;
  }
  return {trapezoid(left, grid.dx()), germain_lefloch_constant(a) * trapezoid(right, grid.dx())};
}

/// max_j (omega_x)_j + F(v_j).
inline double eff_pressure_sup(const State& s, const PhysicalParams& params, const Grid& grid) {
  require_shape(s, grid, "eff_pressure_sup");
  if (first_nonpositive(s.v) != s.v.size()) throw DomainError("eff_pressure_sup: specific volume must be positive");
  const OmegaState w = to_omega(s, params, grid);
  const Field wx = derivative(w.omega, 0.0, grid.dx(), 1);
  double sup = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < wx.size(); ++j)
    sup = std::max(sup, wx[j] + f_effective(s.v[j], params.nu(), params.gamma()));
  return sup;
}

struct DecayNorms {
  double sup_norm;   ///< ||(v - 1, u)||_inf
  double grad_norm;  ///< ||v_x|| + ||v_xx|| + ||u_x||
};

inline DecayNorms decay_norms(const State& s, const Grid& grid) {
  require_shape(s, grid, "decay_norms");
  double sup = 0.0;
  for (std::size_t j = 0; j < s.v.size(); ++j) sup = std::max({sup, std::abs(s.v[j] - 1.0), std::abs(s.u[j])});
  const double dx = grid.dx();
  const double grad = detail::l2_norm(derivative(s.v, 1.0, dx, 1), dx) +
                      detail::l2_norm(derivative(s.v, 1.0, dx, 2), dx) +
                      detail::l2_norm(derivative(s.u, 0.0, dx, 1), dx);
  return {sup, grad};
}

/// Exponents at which the coercivity inequality is tracked.
inline constexpr std::array<double, 3> kGlExponents{2.0, 3.0, 4.0};

/// rhs/lhs of the coercivity inequality on f = v; NaN when min v < 1e-4, 0 when both sides vanish.
inline std::array<double, 3> gl_ratios(const State& s, const Grid& grid) {
  std::array<double, 3> out{};
  const bool admissible = min_of(s.v) >= 1e-4;
  const ScalarField f{s.v, 1.0};
  for (std::size_t i = 0; i < kGlExponents.size(); ++i) {
    if (!admissible) {
      out[i] = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    const auto sides = germain_lefloch(f, kGlExponents[i], grid);
    out[i] = sides.lhs > 0.0 ? sides.rhs / sides.lhs : (sides.rhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
  }
  return out;
}

}  // namespace qns
