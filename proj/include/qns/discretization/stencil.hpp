#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qns/core/errors.hpp"
#include "qns/core/grid.hpp"
#include "qns/core/state.hpp"

namespace qns {

/// Nodal values on a grid plus the constant they take beyond either end.
struct ScalarField {
  Field values;
  double far_field = 0.0;
};

namespace detail {

// Ghost-padded read: nodes outside [0, n) take the far-field constant.
struct Padded {
  std::span<const double> f;
  double far;
  double operator()(std::ptrdiff_t j) const {
    return (j < 0 || j >= static_cast<std::ptrdiff_t>(f.size())) ? far : f[static_cast<std::size_t>(j)];
  }
};

inline double d1_at(const Padded& g, std::ptrdiff_t j, double inv) { return (g(j + 1) - g(j - 1)) * inv; }
inline double d2_at(const Padded& g, std::ptrdiff_t j, double inv) { return ((g(j + 1) + g(j - 1)) - 2.0 * g(j)) * inv; }
inline double d3_at(const Padded& g, std::ptrdiff_t j, double inv) {
  return ((g(j + 2) - g(j - 2)) - 2.0 * (g(j + 1) - g(j - 1))) * inv;
}

}  // namespace detail

/// Second-order centered derivative of the given order (1, 2 or 3) written into `out`.
/// Ghost nodes take `far`, so any derivative of a field equal to its far-field
/// constant vanishes identically, boundaries included.
inline void apply_derivative(std::span<const double> f, double far, double dx, int order, std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(f.size());
  if (order < 1 || order > 3) throw ArgumentError("derivative order must be 1, 2 or 3, got " + std::to_string(order));
  if (n - 1 < 2 * order) throw ArgumentError("grid too coarse for derivative of order " + std::to_string(order));
  if (out.size() != f.size()) throw ArgumentError("derivative output size mismatch");

  const detail::Padded g{f, far};
  const double* p = f.data();
  double* o = out.data();
  switch (order) {
    case 1: {
      const double inv = 1.0 / (2.0 * dx);
      o[0] = detail::d1_at(g, 0, inv);
      for (std::ptrdiff_t j = 1; j < n - 1; ++j) o[j] = (p[j + 1] - p[j - 1]) * inv;
      o[n - 1] = detail::d1_at(g, n - 1, inv);
      break;
    }
    case 2: {
      const double inv = 1.0 / (dx * dx);
      o[0] = detail::d2_at(g, 0, inv);
      for (std::ptrdiff_t j = 1; j < n - 1; ++j) o[j] = ((p[j + 1] + p[j - 1]) - 2.0 * p[j]) * inv;
      o[n - 1] = detail::d2_at(g, n - 1, inv);
      break;
    }
    default: {
      const double inv = 1.0 / (2.0 * dx * dx * dx);
      for (std::ptrdiff_t j : {std::ptrdiff_t{0}, std::ptrdiff_t{1}, n - 2, n - 1}) o[j] = detail::d3_at(g, j, inv);
      for (std::ptrdiff_t j = 2; j < n - 2; ++j)
        o[j] = ((p[j + 2] - p[j - 2]) - 2.0 * (p[j + 1] - p[j - 1])) * inv;
      break;
    }
  }
}

inline Field derivative(std::span<const double> f, double far, double dx, int order) {
  Field out(f.size());
  apply_derivative(f, far, dx, order, out);
  return out;
}

/// Derivative of a field; the result's far field is 0.
inline ScalarField fd_derivative(const ScalarField& field, int order, const Grid& grid) {
  if (field.values.size() != grid.size()) throw ArgumentError("fd_derivative: field does not match grid");
  return {derivative(field.values, field.far_field, grid.dx(), order), 0.0};
}

/// Composite trapezoid rule over the nodes.
inline double trapezoid(std::span<const double> f, double dx) {
  if (f.empty()) return 0.0;
  double s = 0.5 * (f.front() + f.back());
  for (std::size_t j = 1; j + 1 < f.size(); ++j) s += f[j];
  return s * dx;
}

}  // namespace qns
