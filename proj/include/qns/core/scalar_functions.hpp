#pragma once

#include <cmath>
#include <string>

#include "qns/core/errors.hpp"

namespace qns {

namespace detail {
inline void require_positive_scalar(double v, const char* who) {
  if (!(v > 0.0)) throw DomainError(std::string(who) + ": argument must be positive");
}
}  // namespace detail

/// Lagrangian pressure p(v) = v^(-gamma).
inline double pressure(double v, double gamma) {
  detail::require_positive_scalar(v, "pressure");
  if (gamma == 1.0) return 1.0 / v;
  if (gamma == 2.0) return 1.0 / (v * v);
  return std::pow(v, -gamma);
}

/// Relative potential energy Phi(v) = p(1)(v-1) - int_1^v p(s) ds.
/// Nonnegative, convex, zero only at v = 1.
inline double phi(double v, double gamma) {
  detail::require_positive_scalar(v, "phi");
  if (gamma == 1.0) return v - 1.0 - std::log(v);
  return v - 1.0 + (std::pow(v, 1.0 - gamma) - 1.0) / (gamma - 1.0);
}

struct CPair {
  double plus;
  double minus;
};

/// c_plus/minus = nu +- sqrt(nu^2 - eps^2), the factorisation of the xi system.
inline CPair c_pair(double nu, double eps) {
  if (eps < 0.0) throw ArgumentError("c_pair: eps must be >= 0");
  if (eps > nu)
    throw RegimeError("c_pair: eps > nu, the effective-velocity xi system is complex in this regime");
  const double plus = nu + std::sqrt((nu - eps) * (nu + eps));
  // eps^2 / c_plus avoids the cancellation in nu - sqrt(.) for small eps
  return {plus, eps * eps / plus};
}

/// F(v) of the effective pressure omega_x + F(v).
inline double f_effective(double v, double nu, double gamma) {
  detail::require_positive_scalar(v, "f_effective");
  if (gamma == 2.0) return -(gamma / (2.0 * nu)) * std::log(v);
  return gamma / (2.0 * nu * (gamma - 2.0)) * std::pow(v, 2.0 - gamma);
}

}  // namespace qns
