#pragma once

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qns/diagnostics/record.hpp"
#include "qns/discretization/bohm.hpp"
#include "qns/experiments/cross_check.hpp"
#include "qns/experiments/decay_study.hpp"
#include "qns/experiments/limit_study.hpp"
#include "qns/io/config_parser.hpp"
#include "qns/io/csv.hpp"
#include "qns/io/json.hpp"
#include "qns/version.hpp"

namespace qns::io {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumerical = 2;

namespace detail {

namespace fs = std::filesystem;

struct Outputs {
  fs::path dir;
  std::string stem;
  RunManifest manifest;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  fs::path file(const std::string& suffix) {
    fs::path p = dir / (stem + suffix);
    manifest.outputs.push_back(p.string());
    return p;
  }

  void finish() {
    manifest.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_json(manifest.to_json(), file(".manifest.json"));
    for (const std::string& p : manifest.outputs)
      if (!fs::exists(p)) throw Error("declared output '" + p + "' was not written");
  }
};

inline Outputs prepare_outputs(const std::string& config_path, const std::string& out_dir, const ParsedConfig& parsed) {
  Outputs o;
  o.dir = out_dir;
  fs::create_directories(o.dir);
  o.stem = fs::path(config_path).stem().string();
  o.manifest.config = parsed.entries;
  return o;
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto t = trim(item);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

inline const SimConfig& require_sim(const ParsedConfig& parsed, const char* cmd) {
  if (parsed.is_study()) throw ConfigError(std::string(cmd) + " expects a simulation config (no eps_list)");
  return std::get<SimConfig>(parsed.config);
}

inline int run_simulate(const std::string& path, const std::string& out_dir, std::ostream& out) {
  const ParsedConfig parsed = parse_config(path);
  const SimConfig& cfg = require_sim(parsed, "simulate");
  Outputs o = prepare_outputs(path, out_dir, parsed);
  const Grid grid = cfg.grid();
  const Trajectory traj = advance(cfg);
  const std::vector<DiagnosticsRecord> records = diagnose(traj, cfg.params, grid);
  write_diagnostics_csv(records, o.file(".diagnostics.csv"));
  const Snapshot& last = traj.final_snapshot();
  write_json(snapshot_json(last.t, last.state, grid), o.file(".final.json"));
  o.manifest.warnings = traj.warnings;
  for (const std::string& w : traj.warnings) out << "warning: " << w << '\n';
  o.finish();
  out << "simulate: " << traj.step_count << " steps, " << traj.snapshots.size() << " snapshots, regime "
      << to_string(cfg.params.regime()) << ", v in [" << traj.v_min_observed << ", " << traj.v_max_observed
      << "], energy balance residual " << energy_balance_residual(traj, cfg.params, grid) << '\n';
  return kExitOk;
}

inline int run_study(const std::string& path, const std::string& out_dir, std::ostream& out) {
  const ParsedConfig parsed = parse_config(path);
  if (!parsed.is_study()) throw ConfigError("study-limit expects eps_list in the config");
  const LimitStudyConfig& cfg = std::get<LimitStudyConfig>(parsed.config);
  Outputs o = prepare_outputs(path, out_dir, parsed);
  const LimitStudyResult result = limit_study(cfg);
  write_study_csv(result, o.file(".study.csv"));
  write_json(study_summary_json(result, cfg), o.file(".study.json"));
  o.manifest.warnings = result.warnings;
  o.finish();
  for (const OrderFit& f : result.fits) {
    out << "k=" << f.k << ": ";
    if (f.fit)
      out << "slope " << f.fit->slope << " (log residual " << f.fit->residual << ")\n";
    else
      out << "no fit" << (f.zero_error ? " (zero-error)" : "") << '\n';
  }
  return kExitOk;
}

inline int run_cross_check(const std::string& path, const std::string& list, const std::string& out_dir,
                           std::ostream& out) {
  const ParsedConfig parsed = parse_config(path);
  const SimConfig& cfg = require_sim(parsed, "cross-check");
  std::vector<Formulation> forms;
  if (list.empty()) {
    forms = {Formulation::kPrimitive, Formulation::kOmega};
    if (cfg.params.eps() <= cfg.params.nu()) forms.push_back(Formulation::kXi);
  } else {
    for (const std::string& name : split_list(list)) {
      try {
        forms.push_back(parse_formulation(name));
      } catch (const ArgumentError& e) {
        throw ConfigError(e.what());
      }
    }
  }
  if (std::find(forms.begin(), forms.end(), Formulation::kXi) != forms.end() && cfg.params.eps() > cfg.params.nu())
    throw ConfigError("regime error: the xi formulation requires eps <= nu");
  Outputs o = prepare_outputs(path, out_dir, parsed);
  const CrossCheckReport report = cross_check(cfg, forms);
  json pairs = json::array();
  for (const PairDiscrepancy& p : report.pairs) {
    out << to_string(p.first) << " vs " << to_string(p.second) << ": " << p.discrepancy;
    if (p.refined) out << " -> " << *p.refined << " at 2N";
    if (p.ratio) out << " (ratio " << *p.ratio << ")";
    out << (p.shrinks ? "" : "  [does not shrink 3x]") << '\n';
    pairs.push_back({{"first", to_string(p.first)},
                     {"second", to_string(p.second)},
                     {"discrepancy", p.discrepancy},
                     {"refined", p.refined ? json(*p.refined) : json(nullptr)},
                     {"ratio", p.ratio ? json(*p.ratio) : json(nullptr)},
                     {"shrinks", p.shrinks}});
  }
  write_json({{"pairs", pairs}, {"max_discrepancy", report.max_discrepancy}}, o.file(".crosscheck.json"));
  o.finish();
  return kExitOk;
}

inline int run_identities(const std::string& path, const std::string& out_dir, std::ostream& out) {
  const ParsedConfig parsed = parse_config(path);
  const SimConfig& cfg = require_sim(parsed, "check-identities");
  Outputs o = prepare_outputs(path, out_dir, parsed);

  json bohm = json::array();
  out << "bohm identity on rho = 1/v0\n  N  residual  observed_order\n";
  double previous = 0.0;
  for (int level = 0; level < 4; ++level) {
    const Grid grid(cfg.half_width, cfg.n_cells << level);
    const State s0 = initial_data(cfg.initial, grid);
    ScalarField rho{Field(grid.size()), 1.0};
    for (std::size_t j = 0; j < grid.size(); ++j) rho.values[j] = 1.0 / s0.v[j];
    const double r = bohm_residual(rho, grid);
    json row{{"N", grid.n_cells()}, {"residual", r}};
    out << "  " << grid.n_cells() << "  " << r;
    if (level > 0 && r > 0.0 && previous > 0.0) {
      const double order = std::log2(previous / r);
      row["order"] = order;
      out << "  " << order;
    }
    out << '\n';
    bohm.push_back(row);
    previous = r;
  }

  json gl = json::array();
  const Grid grid = cfg.grid();
  const State s0 = initial_data(cfg.initial, grid);
  out << "germain-lefloch on v0\n  a  lhs  rhs  holds\n";
  for (double a : {1.5, 2.0, 3.0, 4.0}) {
    const auto sides = germain_lefloch(ScalarField{s0.v, 1.0}, a, grid);
    const bool holds = sides.lhs >= sides.rhs - 1e-10 * (1.0 + sides.lhs);
    out << "  " << a << "  " << sides.lhs << "  " << sides.rhs << "  " << (holds ? "yes" : "NO") << '\n';
    gl.push_back({{"a", a}, {"lhs", sides.lhs}, {"rhs", sides.rhs}, {"holds", holds}});
  }
  write_json({{"bohm", bohm}, {"germain_lefloch", gl}}, o.file(".identities.json"));
  o.finish();
  return kExitOk;
}

inline int run_decay(const std::string& path, const std::string& times, const std::string& out_dir,
                     std::ostream& out) {
  const ParsedConfig parsed = parse_config(path);
  SimConfig cfg = require_sim(parsed, "decay");
  std::vector<double> samples;
  for (const std::string& item : split_list(times)) {
    const auto x = parse_double(item);
    if (!x || !(*x >= 0.0)) throw ConfigError("--times: bad entry '" + item + "'");
    samples.push_back(*x);
  }
  if (samples.empty()) throw ConfigError("--times needs at least one value");
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (!(samples[i] > samples[i - 1])) throw ConfigError("--times must be strictly increasing");
  cfg.t_final = std::max(cfg.t_final, samples.back());
  Outputs o = prepare_outputs(path, out_dir, parsed);
  const DecaySeries series = decay_study(cfg, samples);

  std::ofstream csv(o.file(".decay.csv"));
  csv << "t,sup_norm,grad_norm,dissipation_rate\n";
  out << "t  sup_norm  grad_norm  dissipation_rate\n";
  for (const DecaySample& s : series.samples) {
    csv << format_double(s.t) << ',' << format_double(s.norms.sup_norm) << ',' << format_double(s.norms.grad_norm)
        << ',' << format_double(s.dissipation_rate) << '\n';
    out << s.t << "  " << s.norms.sup_norm << "  " << s.norms.grad_norm << "  " << s.dissipation_rate << '\n';
  }
  csv.close();
  if (series.non_monotone_tail) out << "warning: decay tail is not monotone\n";
  o.manifest.warnings = series.warnings;
  if (series.non_monotone_tail) o.manifest.warnings.push_back("non-monotone decay tail");
  o.finish();
  return kExitOk;
}

}  // namespace detail

/// Command-line entry point. Exit codes: 0 success, 1 usage or configuration
/// error, 2 numerical failure (positivity or step errors).
inline int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"One-dimensional quantum Navier-Stokes simulator (Lagrangian coordinates)", "qns"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string config;
  std::string out_dir = ".";
  std::string formulations;
  std::string times;

  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("config", config, "key=value configuration file")->required();
    sub->add_option("--out", out_dir, "output directory");
    return sub;
  };
  CLI::App* simulate = add("simulate", "advance one configuration and write diagnostics CSV + final-state JSON");
  CLI::App* study = add("study-limit", "vanishing-dispersion study: eps sweep against the eps = 0 reference");
  CLI::App* cross = add("cross-check", "advance the same data under several formulations and compare");
  cross->add_option("--formulations", formulations, "comma-separated subset of primitive,xi,omega");
  CLI::App* identities = add("check-identities", "Bohm identity refinement table and coercivity sweep on the initial data");
  CLI::App* decay = add("decay", "decay norms at the given sample times");
  decay->add_option("--times", times, "comma-separated increasing sample times")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitConfig;
  }

  try {
    if (*simulate) return detail::run_simulate(config, out_dir, out);
    if (*study) return detail::run_study(config, out_dir, out);
    if (*cross) return detail::run_cross_check(config, formulations, out_dir, out);
    if (*identities) return detail::run_identities(config, out_dir, out);
    if (*decay) return detail::run_decay(config, times, out_dir, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const StepError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const StateError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const StudyError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const RegimeError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ArgumentError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  err << app.help();
  return kExitConfig;
}

}  // namespace qns::io
