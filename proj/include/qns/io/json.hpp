#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qns/core/errors.hpp"
#include "qns/core/grid.hpp"
#include "qns/core/state.hpp"
#include "qns/experiments/limit_study.hpp"
#include "qns/version.hpp"

namespace qns::io {

using nlohmann::json;

/// {t, L, N, v: [...], u: [...]}
inline json snapshot_json(double t, const State& s, const Grid& grid) {
  return {{"t", t}, {"L", grid.half_width()}, {"N", grid.n_cells()}, {"v", s.v}, {"u", s.u}};
}

inline std::pair<double, State> snapshot_from_json(const json& j) {
  State s{j.at("v").get<Field>(), j.at("u").get<Field>()};
  if (s.v.size() != s.u.size() || s.v.size() != j.at("N").get<std::size_t>() + 1)
    throw Error("snapshot arrays do not match N");
  return {j.at("t").get<double>(), std::move(s)};
}

inline void write_json(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << j.dump(1) << '\n';
  out.flush();
  if (!out) throw Error("write to '" + path.string() + "' failed");
}

inline json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return json::parse(in);
}

inline json study_summary_json(const LimitStudyResult& result, const LimitStudyConfig& cfg) {
  json fits = json::array();
  for (const OrderFit& f : result.fits) {
    json entry{{"k", f.k}, {"zero_error", f.zero_error}};
    if (f.fit) {
      entry["slope"] = f.fit->slope;
      entry["intercept"] = f.fit->intercept;
      entry["residual"] = f.fit->residual;
    } else {
      entry["slope"] = nullptr;
    }
    fits.push_back(entry);
  }
  return {{"eps_list", cfg.eps_list},
          {"compare_time", cfg.compare_time},
          {"N", cfg.base.n_cells},
          {"L", cfg.base.half_width},
          {"shared_dt", result.shared_dt},
          {"fits", fits},
          {"warnings", result.warnings}};
}

/// Record of one CLI invocation.
struct RunManifest {
  std::vector<std::pair<std::string, std::string>> config;
  std::string version = kVersion;
  double wall_seconds = 0.0;
  std::vector<std::string> warnings;
  std::vector<std::string> outputs;

  json to_json() const {
    json cfg = json::object();
    for (const auto& [k, v] : config) cfg[k] = v;
    return {{"config", cfg}, {"version", version}, {"wall_seconds", wall_seconds}, {"warnings", warnings},
            {"outputs", outputs}};
  }
};

}  // namespace qns::io
