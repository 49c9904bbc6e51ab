#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qns/core/errors.hpp"
#include "qns/experiments/limit_study.hpp"
#include "qns/integrator/config.hpp"
#include "qns/io/format.hpp"

namespace qns::io {

/// A parsed configuration plus the key=value pairs it came from, in file order.
struct ParsedConfig {
  std::variant<SimConfig, LimitStudyConfig> config;
  std::vector<std::pair<std::string, std::string>> entries;

  bool is_study() const { return std::holds_alternative<LimitStudyConfig>(config); }
};

namespace detail {

inline const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys{
      "nu",  "eps",    "gamma",  "L",   "N",   "t_final", "formulation", "family", "A",
      "B",   "sigma",  "center", "cfl", "snapshot_interval", "positivity_floor", "boundary_tol",
      "max_steps", "eps_list", "t_star", "derivative_orders"};
  return keys;
}

struct Entry {
  std::string value;
  int line;
};

class KeyReader {
 public:
  explicit KeyReader(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

  bool has(const std::string& key) const { return entries_.count(key) > 0; }
  int line(const std::string& key) const { return has(key) ? entries_.at(key).line : 0; }

  double number(const std::string& key) const {
    const Entry& e = require(key);
    const auto x = parse_double(e.value);
    if (!x || !std::isfinite(*x)) throw ConfigError("'" + key + "' is not a finite number: " + e.value, e.line);
    return *x;
  }
  double number(const std::string& key, double fallback) const { return has(key) ? number(key) : fallback; }

  long long integer(const std::string& key) const {
    const Entry& e = require(key);
    const auto x = parse_integer(e.value);
    if (!x) throw ConfigError("'" + key + "' is not an integer: " + e.value, e.line);
    return *x;
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    return has(key) ? entries_.at(key).value : fallback;
  }

  std::vector<double> numbers(const std::string& key) const {
    const Entry& e = require(key);
    std::vector<double> out;
    std::stringstream ss(e.value);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto x = parse_double(trim(item));
      if (!x || !std::isfinite(*x)) throw ConfigError("'" + key + "' has a malformed entry: " + item, e.line);
      out.push_back(*x);
    }
    if (out.empty()) throw ConfigError("'" + key + "' is empty", e.line);
    return out;
  }

  const Entry& require(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) throw ConfigError("missing required key '" + key + "'");
    return it->second;
  }

 private:
  std::map<std::string, Entry> entries_;
};

// Rethrow a library validation error as a ConfigError pointing at `key`.
template <class F>
auto at_key(const KeyReader& r, const std::string& key, F&& f) {
  try {
    return f();
  } catch (const ConfigError& e) {
    if (e.line() > 0) throw;
    throw ConfigError(e.what(), r.line(key));
  } catch (const RegimeError& e) {
    throw ConfigError(std::string("regime error: ") + e.what(), r.line(key));
  } catch (const Error& e) {
    throw ConfigError(e.what(), r.line(key));
  }
}

}  // namespace detail

/// Parse the key=value configuration format. One key per line, '#' starts a
/// comment, unknown or repeated keys are errors. The presence of `eps_list`
/// makes it a limit-study configuration.
inline ParsedConfig parse_config_text(const std::string& text) {
  std::map<std::string, detail::Entry> entries;
  ParsedConfig parsed{SimConfig{}, {}};
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  const auto& keys = detail::known_keys();
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("malformed line, expected key=value", lineno);
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError("malformed line, empty key", lineno);
    if (value.empty()) throw ConfigError("key '" + key + "' has no value", lineno);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw ConfigError("unknown key '" + key + "'", lineno);
    if (entries.count(key)) throw ConfigError("duplicate key '" + key + "'", lineno);
    entries.emplace(key, detail::Entry{value, lineno});
    parsed.entries.emplace_back(key, value);
  }

  const detail::KeyReader r(std::move(entries));
  SimConfig cfg;
  const double nu = r.number("nu");
  const double eps = r.number("eps");
  const double gamma = r.number("gamma");
  if (!(nu > 0.0)) throw ConfigError("nu must be > 0", r.line("nu"));
  if (!(eps >= 0.0)) throw ConfigError("eps must be >= 0", r.line("eps"));
  if (!(gamma >= 1.0)) throw ConfigError("gamma must be >= 1", r.line("gamma"));
  cfg.params = PhysicalParams(nu, eps, gamma);

  cfg.half_width = r.number("L");
  const long long n = r.integer("N");
  if (n < 16 || n % 2 != 0 || n > (1LL << 26)) throw ConfigError("N must be even and >= 16", r.line("N"));
  cfg.n_cells = static_cast<int>(n);
  detail::at_key(r, "L", [&] { return cfg.grid(); });

  cfg.t_final = r.number("t_final");
  if (!(cfg.t_final > 0.0)) throw ConfigError("t_final must be > 0", r.line("t_final"));
  cfg.formulation = detail::at_key(r, "formulation", [&] { return parse_formulation(r.text("formulation", "primitive")); });
  if (!r.has("family")) throw ConfigError("missing required key 'family'");
  cfg.initial.family = detail::at_key(r, "family", [&] { return parse_family(r.text("family", "")); });
  cfg.initial.amplitude = r.number("A", 0.0);
  if (!(cfg.initial.amplitude > -1.0)) throw ConfigError("A must be > -1 so that v0 > 0", r.line("A"));
  cfg.initial.velocity = r.number("B", 0.0);
  cfg.initial.sigma = r.number("sigma", 1.0);
  if (!(cfg.initial.sigma > 0.0)) throw ConfigError("sigma must be > 0", r.line("sigma"));
  cfg.initial.center = r.number("center", cfg.initial.center);
  cfg.cfl = r.number("cfl", cfg.cfl);
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]", r.line("cfl"));
  cfg.snapshot_interval = r.number("snapshot_interval", 0.0);
  if (cfg.snapshot_interval < 0.0) throw ConfigError("snapshot_interval must be >= 0", r.line("snapshot_interval"));
  cfg.positivity_floor = r.number("positivity_floor", cfg.positivity_floor);
  cfg.boundary_tol = r.number("boundary_tol", cfg.boundary_tol);
  if (r.has("max_steps")) {
    const long long m = r.integer("max_steps");
    if (m <= 0) throw ConfigError("max_steps must be > 0", r.line("max_steps"));
    cfg.max_steps = static_cast<std::size_t>(m);
  }
  if (cfg.formulation == Formulation::kXi && eps > nu)
    throw ConfigError("regime error: formulation=xi requires eps <= nu (eps = " + format_double(eps) +
                          ", nu = " + format_double(nu) + "); for eps > nu the xi system is complex",
                      r.line("formulation"));
  detail::at_key(r, "positivity_floor", [&] {
    cfg.validate();
    return 0;
  });

  const bool study_keys = r.has("eps_list") || r.has("t_star") || r.has("derivative_orders");
  if (!study_keys) {
    parsed.config = cfg;
    return parsed;
  }
  if (!r.has("eps_list")) throw ConfigError("limit-study keys given without eps_list");
  LimitStudyConfig study;
  study.base = cfg;
  study.eps_list = r.numbers("eps_list");
  study.compare_time = r.number("t_star", cfg.t_final);
  if (r.has("derivative_orders")) {
    study.derivative_orders.clear();
    for (double k : r.numbers("derivative_orders")) {
      if (k != std::floor(k)) throw ConfigError("derivative_orders must be integers", r.line("derivative_orders"));
      study.derivative_orders.push_back(static_cast<int>(k));
    }
  }
  detail::at_key(r, "eps_list", [&] {
    study.validate();
    return 0;
  });
  parsed.config = study;
  return parsed;
}

inline ParsedConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration file '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace qns::io
