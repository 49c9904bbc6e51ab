#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "qns/core/errors.hpp"

namespace qns {

struct RatePoint {
  double eps;
  double error;
};

/// Least-squares line ln(error) = slope ln(eps) + intercept.
struct RateFit {
  double slope;
  double intercept;
  double residual;  ///< max |ln error - fitted| over the points
};

inline RateFit rate_fit(std::span<const RatePoint> points) {
  if (points.size() < 3) throw DegenerateDataError("rate_fit: at least 3 points are required");
  const auto n = static_cast<double>(points.size());
  double mx = 0.0;
  double my = 0.0;
  for (const RatePoint& p : points) {
    if (!(p.eps > 0.0)) throw DegenerateDataError("rate_fit: eps values must be positive");
    if (!(p.error > 0.0)) throw DegenerateDataError("rate_fit: error values must be positive");
    mx += std::log(p.eps);
    my += std::log(p.error);
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (const RatePoint& p : points) {
    const double dx = std::log(p.eps) - mx;
    sxy += dx * (std::log(p.error) - my);
    sxx += dx * dx;
  }
  if (!(sxx > 0.0)) throw DegenerateDataError("rate_fit: eps values must not all coincide");
  RateFit fit{sxy / sxx, 0.0, 0.0};
  fit.intercept = my - fit.slope * mx;
  for (const RatePoint& p : points)
    fit.residual = std::max(fit.residual, std::abs(std::log(p.error) - (fit.slope * std::log(p.eps) + fit.intercept)));
  return fit;
}

inline RateFit rate_fit(const std::vector<RatePoint>& points) { return rate_fit(std::span<const RatePoint>(points)); }

}  // namespace qns
