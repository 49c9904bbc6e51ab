#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include "qns/core/errors.hpp"

namespace qns {

enum class Regime {
  kLimit,         ///< eps == 0: classical Navier-Stokes
  kParabolic,     ///< 0 < eps <= nu: intermediary / parabolic
  kDispersive,    ///< eps > nu
};

inline std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::kLimit: return "limit";
    case Regime::kParabolic: return "intermediary/parabolic";
    case Regime::kDispersive: return "dispersive";
  }
  return "unknown";
}

/// Viscosity nu, Planck constant eps and adiabatic exponent gamma.
class PhysicalParams {
 public:
  PhysicalParams(double nu, double eps, double gamma) : nu_(nu), eps_(eps), gamma_(gamma) {
    if (!(nu > 0.0) || !std::isfinite(nu)) throw ArgumentError("nu must be > 0");
    if (!(eps >= 0.0) || !std::isfinite(eps)) throw ArgumentError("eps must be >= 0");
    if (!(gamma >= 1.0) || !std::isfinite(gamma)) throw ArgumentError("gamma must be >= 1");
  }

  double nu() const noexcept { return nu_; }
  double eps() const noexcept { return eps_; }
  double gamma() const noexcept { return gamma_; }

  Regime regime() const noexcept {
    if (eps_ == 0.0) return Regime::kLimit;
    return eps_ <= nu_ ? Regime::kParabolic : Regime::kDispersive;
  }

  PhysicalParams with_eps(double eps) const { return {nu_, eps, gamma_}; }

 private:
  double nu_;
  double eps_;
  double gamma_;
};

}  // namespace qns
