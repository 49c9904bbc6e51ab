#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qns/core/errors.hpp"
#include "qns/core/grid.hpp"

namespace qns {

using Field = std::vector<double>;

/// Primitive Lagrangian unknowns: specific volume v and velocity u.
struct State {
  Field v;
  Field u;

  static State equilibrium(const Grid& grid) { return {Field(grid.size(), 1.0), Field(grid.size(), 0.0)}; }
};

/// (v, xi) with xi = u - c_plus v_x / v^2.
struct XiState {
  Field v;
  Field xi;
};

/// (v, omega) with omega = u - 2 nu v_x / v^2.
struct OmegaState {
  Field v;
  Field omega;
};

inline Field& second(State& s) { return s.u; }
inline const Field& second(const State& s) { return s.u; }
inline Field& second(XiState& s) { return s.xi; }
inline const Field& second(const XiState& s) { return s.xi; }
inline Field& second(OmegaState& s) { return s.omega; }
inline const Field& second(const OmegaState& s) { return s.omega; }

/// Index of the first node with v <= 0 (or NaN), or v.size() if none.
inline std::size_t first_nonpositive(std::span<const double> v) {
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!(v[j] > 0.0)) return j;
  return v.size();
}

inline void require_positive(std::span<const double> v, const char* who) {
  if (const auto j = first_nonpositive(v); j != v.size())
    throw StateError(std::string(who) + ": specific volume not positive at node " + std::to_string(j), j);
}

template <class S>
void require_shape(const S& s, const Grid& grid, const char* who) {
  if (s.v.size() != grid.size() || second(s).size() != grid.size())
    throw ArgumentError(std::string(who) + ": state arrays do not match the grid");
}

inline double min_of(std::span<const double> f) { return *std::min_element(f.begin(), f.end()); }
inline double max_of(std::span<const double> f) { return *std::max_element(f.begin(), f.end()); }

}  // namespace qns
