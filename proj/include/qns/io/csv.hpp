#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qns/core/errors.hpp"
#include "qns/diagnostics/record.hpp"
#include "qns/experiments/limit_study.hpp"
#include "qns/io/format.hpp"

namespace qns::io {

inline constexpr const char* kDiagnosticsHeader =
    "t,energy,dissipation_rate,dissipation_cum,bd_entropy,v_min,v_max,sup_eff_pressure,decay_sup,decay_grad,"
    "gl_ratio_a2,gl_ratio_a3,gl_ratio_a4";

inline std::string diagnostics_row(const DiagnosticsRecord& r) {
  std::string row;
  for (double x : {r.t, r.energy, r.dissipation_rate, r.dissipation_cum, r.bd_entropy, r.v_min, r.v_max,
                   r.sup_eff_pressure, r.decay_sup, r.decay_grad, r.gl_ratios[0], r.gl_ratios[1], r.gl_ratios[2]}) {
    if (!row.empty()) row += ',';
    row += format_double(x);
  }
  return row;
}

inline void write_diagnostics_csv(const std::vector<DiagnosticsRecord>& records, const std::filesystem::path& path) {
  if (records.empty()) throw ArgumentError("write_diagnostics_csv: no records");
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << kDiagnosticsHeader << '\n';
  for (const DiagnosticsRecord& r : records) out << diagnostics_row(r) << '\n';
  out.flush();
  if (!out) throw Error("write to '" + path.string() + "' failed");
}

inline std::vector<DiagnosticsRecord> read_diagnostics_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::string line;
  if (!std::getline(in, line) || line != kDiagnosticsHeader) throw Error("'" + path.string() + "': unexpected header");
  std::vector<DiagnosticsRecord> out;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      const auto x = parse_double(cell);
      if (!x) throw Error("'" + path.string() + "' line " + std::to_string(lineno) + ": bad number " + cell);
      cells.push_back(*x);
    }
    if (cells.size() != 13) throw Error("'" + path.string() + "' line " + std::to_string(lineno) + ": expected 13 columns");
    DiagnosticsRecord r;
    r.t = cells[0];
    r.energy = cells[1];
    r.dissipation_rate = cells[2];
    r.dissipation_cum = cells[3];
    r.bd_entropy = cells[4];
    r.v_min = cells[5];
    r.v_max = cells[6];
    r.sup_eff_pressure = cells[7];
    r.decay_sup = cells[8];
    r.decay_grad = cells[9];
    r.gl_ratios = {cells[10], cells[11], cells[12]};
    out.push_back(r);
  }
  return out;
}

/// One row per (eps, k): eps,k,error.
inline void write_study_csv(const LimitStudyResult& result, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << "eps,k,error\n";
  for (const LimitErrorRow& row : result.rows)
    out << format_double(row.eps) << ',' << row.k << ',' << format_double(row.error) << '\n';
  out.flush();
  if (!out) throw Error("write to '" + path.string() + "' failed");
}

}  // namespace qns::io
