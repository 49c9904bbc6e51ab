#pragma once

#include <cstddef>
#include <vector>

#include "qns/core/errors.hpp"

namespace qns {

/// Uniform grid on the truncated line [-L, L] with N cells and N+1 nodes.
class Grid {
 public:
  Grid(double half_width, int n_cells) : half_width_(half_width), n_cells_(n_cells) {
    if (!(half_width > 0.0)) throw ArgumentError("grid half width must be > 0");
    if (n_cells < 16 || n_cells % 2 != 0) throw ArgumentError("grid cell count must be even and >= 16");
    dx_ = 2.0 * half_width / n_cells;
  }

  double half_width() const noexcept { return half_width_; }
  int n_cells() const noexcept { return n_cells_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(n_cells_) + 1; }
  double dx() const noexcept { return dx_; }

  // -L + j*dx, written symmetrically so that x_j == -x_{N-j} exactly.
  double node(std::size_t j) const noexcept {
    const auto jj = static_cast<long>(j) - n_cells_ / 2;
    return static_cast<double>(jj) * dx_;
  }

  std::vector<double> nodes() const {
    std::vector<double> x(size());
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = node(j);
    return x;
  }

  Grid refined() const { return {half_width_, 2 * n_cells_}; }

 private:
  double half_width_;
  int n_cells_;
  double dx_;
};

}  // namespace qns
