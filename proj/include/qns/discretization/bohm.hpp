#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "qns/core/errors.hpp"
#include "qns/core/grid.hpp"
#include "qns/discretization/stencil.hpp"

namespace qns {

/// Both sides of 2 rho ((sqrt rho)_yy / sqrt rho)_y = (rho_yy - rho_y^2/rho)_y, nodewise.
struct BohmSides {
  Field quantum;   ///< 2 rho ((sqrt rho)_yy / sqrt rho)_y
  Field korteweg;  ///< (rho_yy - rho_y^2 / rho)_y
};

inline BohmSides bohm_sides(const ScalarField& rho, const Grid& grid) {
  if (rho.values.size() != grid.size()) throw ArgumentError("bohm_residual: field does not match grid");
  if (first_nonpositive(rho.values) != rho.values.size() || !(rho.far_field > 0.0))
    throw DomainError("bohm_residual: density must be positive");
  const double dx = grid.dx();
  const std::size_t n = rho.values.size();

  Field root(n);
  for (std::size_t j = 0; j < n; ++j) root[j] = std::sqrt(rho.values[j]);
  Field potential = derivative(root, std::sqrt(rho.far_field), dx, 2);
  for (std::size_t j = 0; j < n; ++j) potential[j] /= root[j];
  BohmSides sides{derivative(potential, 0.0, dx, 1), {}};
  for (std::size_t j = 0; j < n; ++j) sides.quantum[j] *= 2.0 * rho.values[j];

  const Field r1 = derivative(rho.values, rho.far_field, dx, 1);
  Field flux = derivative(rho.values, rho.far_field, dx, 2);
  for (std::size_t j = 0; j < n; ++j) flux[j] -= r1[j] * r1[j] / rho.values[j];
  sides.korteweg = derivative(flux, 0.0, dx, 1);
  return sides;
}

/// Max over interior nodes of the discrete Bohm-identity defect (eps^2 divided out).
inline double bohm_residual(const ScalarField& rho, const Grid& grid) {
  const BohmSides sides = bohm_sides(rho, grid);
  double r = 0.0;
  // composed stencils reach two nodes; skip those touching ghosts
  for (std::size_t j = 2; j + 2 < sides.quantum.size(); ++j)
    r = std::max(r, std::abs(sides.quantum[j] - sides.korteweg[j]));
  return r;
}

}  // namespace qns
