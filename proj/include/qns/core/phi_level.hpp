#pragma once

#include <cmath>

#include "qns/core/errors.hpp"

namespace qns {

/// The two positive solutions of x - 1 - ln x = C.
struct PhiLevelRoots {
  double alpha;  ///< in (0, 1]
  double beta;   ///< in [1, inf)
};

namespace detail {

inline double phi_level_gap(double x, double level) { return x - 1.0 - std::log(x) - level; }

// Bisection for a sign change of x - 1 - ln x - level on [lo, hi]; the map is
// monotone on either side of x = 1.
inline double bisect_phi_level(double lo, double hi, double level) {
  double g_lo = phi_level_gap(lo, level);
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g_mid = phi_level_gap(mid, level);
    if (g_mid == 0.0) return mid;
    if ((g_mid > 0.0) == (g_lo > 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return std::abs(phi_level_gap(lo, level)) <= std::abs(phi_level_gap(hi, level)) ? lo : hi;
}

}  // namespace detail

/// Solve x - 1 - ln x = level for both roots by bisection.
inline PhiLevelRoots solve_phi_level(double level) {
  if (!(level >= 0.0) || !std::isfinite(level)) throw ArgumentError("solve_phi_level: level must be finite and >= 0");
  if (level == 0.0) return {1.0, 1.0};
  constexpr double kLowerBracket = 1e-12;
  // x - 1 - ln x ~ x for large x, so this upper end is always past the root.
  const double upper = 1.0 + level + std::exp(level) + 10.0;
  if (detail::phi_level_gap(kLowerBracket, level) < 0.0)
    throw ArgumentError("solve_phi_level: level too large, lower root below 1e-12");
  return {detail::bisect_phi_level(kLowerBracket, 1.0, level), detail::bisect_phi_level(1.0, upper, level)};
}

}  // namespace qns
