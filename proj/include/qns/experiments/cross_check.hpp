#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qns/core/errors.hpp"
#include "qns/integrator/advance.hpp"

namespace qns {

struct PairDiscrepancy {
  Formulation first;
  Formulation second;
  double discrepancy;                  ///< max nodal |dv|, |du| at t_final
  std::optional<double> refined;       ///< same on the 2N grid
  std::optional<double> ratio;         ///< discrepancy / refined
  bool shrinks = false;                ///< ratio >= 3
};

struct CrossCheckReport {
  std::vector<PairDiscrepancy> pairs;
  double max_discrepancy = 0.0;
};

inline double max_nodal_difference(const State& a, const State& b) {
  double d = 0.0;
  for (std::size_t j = 0; j < a.v.size(); ++j)
    d = std::max({d, std::abs(a.v[j] - b.v[j]), std::abs(a.u[j] - b.u[j])});
  return d;
}

/// Advance the same data under each formulation and compare final (v, u) pairwise,
/// optionally repeating on the doubled grid to confirm O(dx^2) agreement.
inline CrossCheckReport cross_check(const SimConfig& config, std::vector<Formulation> formulations,
                                    bool check_refinement = true) {
  std::sort(formulations.begin(), formulations.end());
  formulations.erase(std::unique(formulations.begin(), formulations.end()), formulations.end());
  if (formulations.size() < 2) throw ArgumentError("cross_check needs at least two formulations");
  const bool wants_xi = std::find(formulations.begin(), formulations.end(), Formulation::kXi) != formulations.end();
  if (wants_xi && config.params.eps() > config.params.nu())
    throw RegimeError("cross_check: xi formulation requires eps <= nu");

  auto finals = [&](int n_cells) {
    std::vector<State> out;
    for (Formulation f : formulations) {
      SimConfig c = config;
      c.formulation = f;
      c.n_cells = n_cells;
      c.snapshot_interval = 0.0;
      c.snapshot_times.clear();
      out.push_back(advance(c).final_snapshot().state);
    }
    return out;
  };

  const std::vector<State> coarse = finals(config.n_cells);
  std::vector<State> fine;
  if (check_refinement) fine = finals(2 * config.n_cells);

  CrossCheckReport report;
  for (std::size_t i = 0; i < formulations.size(); ++i) {
    for (std::size_t k = i + 1; k < formulations.size(); ++k) {
      PairDiscrepancy p{formulations[i], formulations[k], max_nodal_difference(coarse[i], coarse[k]), {}, {}, false};
      if (check_refinement) {
        p.refined = max_nodal_difference(fine[i], fine[k]);
        if (*p.refined > 0.0) {
          p.ratio = p.discrepancy / *p.refined;
          p.shrinks = *p.ratio >= 3.0;
        } else {
          p.shrinks = p.discrepancy == 0.0;
        }
      }
      report.max_discrepancy = std::max(report.max_discrepancy, p.discrepancy);
      report.pairs.push_back(p);
    }
  }
  return report;
}

}  // namespace qns
