#include "lrmoc/io/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lrmoc/io/io_error.hpp"

namespace lrmoc {

std::string format_float(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

namespace {

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string count(std::size_t v) { return std::to_string(v); }

std::string p_field(const BasisMode& mode) {
  return mode.kind == BasisModeKind::Xxz ? format_float(mode.p) : std::string();
}

std::string size_list(const std::vector<std::size_t>& sizes) {
  std::string out;
  for (std::size_t k = 0; k < sizes.size(); ++k) out += (k ? ";" : "") + std::to_string(sizes[k]);
  return out;
}

std::string sign_of(double v) { return v > 0 ? "1" : (v < 0 ? "-1" : "0"); }

}  // namespace

std::string render_csv(const CsvTable& table, const std::string& manifest_name) {
  std::ostringstream out;
  out << "# schema=" << table.schema << " version=" << kCsvSchemaVersion << " manifest=" << manifest_name << '\n';
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << quote(table.columns[c]);
  out << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) throw std::logic_error("row width differs from the header");
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << quote(row[c]);
    out << '\n';
  }
  return out.str();
}

void write_csv(const std::filesystem::path& path, const CsvTable& table, const std::string& manifest_name) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << render_csv(table, manifest_name);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

CsvTable phase_diagram_csv(const PhaseDiagramTable& table) {
  CsvTable t{"phase_diagram",
             {"alpha", "density", "basis", "p", "N_list", "s_mean", "s_stderr", "mi_mean", "mi_stderr", "tmi_mean",
              "tmi_stderr", "tmi_sign", "log_abs_tmi", "dr2_entanglement", "dr2_purification",
              "entanglement_verdict", "purification_verdict", "status"},
             {}};
  for (const auto& r : table.rows) {
    const bool ok = r.status == "ok";
    auto num = [&](double v) { return ok ? format_float(v) : std::string(); };
    t.rows.push_back({format_float(r.alpha), format_float(r.density), to_string(r.basis.kind), p_field(r.basis),
                      size_list(r.sizes), num(r.s.mean), num(r.s.std_error), num(r.mi.mean), num(r.mi.std_error),
                      num(r.tmi.mean), num(r.tmi.std_error), ok ? sign_of(r.tmi.mean) : std::string(),
                      ok && r.tmi.mean != 0.0 ? format_float(std::log(std::abs(r.tmi.mean))) : std::string(),
                      r.entanglement ? format_float(r.entanglement->delta_r2) : std::string(),
                      r.purification ? format_float(r.purification->delta_r2) : std::string(),
                      r.entanglement ? to_string(r.entanglement->verdict) : std::string(),
                      r.purification ? to_string(r.purification->verdict) : std::string(), r.status});
  }
  return t;
}

CsvTable steady_state_csv(const PhaseDiagramTable& table) {
  CsvTable t{"steady_state",
             {"alpha", "density", "basis", "p", "N", "s_mean", "s_stderr", "mi_mean", "mi_stderr", "tmi_mean",
              "tmi_stderr"},
             {}};
  for (const auto& r : table.rows) {
    for (const auto& e : r.per_size) {
      t.rows.push_back({format_float(r.alpha), format_float(r.density), to_string(r.basis.kind), p_field(r.basis),
                        count(e.n_qubits), format_float(e.s.mean), format_float(e.s.std_error),
                        format_float(e.mi.mean), format_float(e.mi.std_error), format_float(e.tmi.mean),
                        format_float(e.tmi.std_error)});
    }
  }
  return t;
}

CsvTable time_series_csv(const Ensemble& ensemble) {
  CsvTable t{"time_series", {"trajectory_id", "layer", "s", "mi", "tmi", "s_ancilla"}, {}};
  for (const auto& series : ensemble) {
    for (std::size_t k = 0; k < series.layers.size(); ++k) {
      const auto& v = series.values[k];
      t.rows.push_back({std::to_string(series.trajectory_id), count(series.layers[k]), std::to_string(v.s_half),
                        std::to_string(v.mi_antipodal), std::to_string(v.tmi),
                        v.s_ancilla ? std::to_string(*v.s_ancilla) : std::string()});
    }
  }
  return t;
}

CsvTable bell_census_csv(const std::vector<double>& mean_counts) {
  CsvTable t{"bell_census", {"r", "mean_count"}, {}};
  for (std::size_t r = 1; r <= mean_counts.size(); ++r) t.rows.push_back({count(r), format_float(mean_counts[r - 1])});
  return t;
}

CsvTable mi_profile_csv(const MiProfile& profile) {
  CsvTable t{"mi_profile", {"r", "mean_mi", "mi_stderr"}, {}};
  for (std::size_t r = 1; r <= profile.mean.size(); ++r) {
    t.rows.push_back({count(r), format_float(profile.mean[r - 1]), format_float(profile.std_error[r - 1])});
  }
  return t;
}

CsvTable purification_survival_csv(const std::vector<PurificationSize>& sizes) {
  CsvTable t{"purification_survival", {"N", "layer", "survival"}, {}};
  for (const auto& s : sizes) {
    for (std::size_t layer = 0; layer < s.survival.size(); ++layer) {
      t.rows.push_back({count(s.n_qubits), count(layer), format_float(s.survival[layer])});
    }
  }
  return t;
}

CsvTable purification_tau_csv(const std::vector<PurificationSize>& sizes) {
  CsvTable t{"purification_tau", {"N", "depth", "tau", "r2", "points_used", "censored", "censored_trajectories"}, {}};
  for (const auto& s : sizes) {
    t.rows.push_back({count(s.n_qubits), count(s.depth), format_float(s.fit.tau), format_float(s.fit.r2),
                      count(s.fit.points_used), s.fit.censored ? "1" : "0", count(s.censored_trajectories)});
  }
  return t;
}

CsvTable tss_csv(const std::vector<TssSize>& sizes) {
  CsvTable t{"tss",
             {"N", "t_ss_mean", "t_ss_stderr", "settled", "never_settled", "steady_abs_tmi", "absolute_band"},
             {}};
  for (const auto& s : sizes) {
    t.rows.push_back({count(s.n_qubits), format_float(s.t_ss.mean), format_float(s.t_ss.std_error),
                      count(s.t_ss.count), count(s.never_settled), format_float(s.steady.mean),
                      s.absolute_band ? "1" : "0"});
  }
  return t;
}

CsvTable fit_report_csv(const std::vector<std::pair<std::string, FitReport>>& reports) {
  CsvTable t{"fit_report",
             {"label", "primary_model", "primary_a", "primary_b", "primary_r2", "competitor_model", "competitor_a",
              "competitor_b", "competitor_r2", "delta_r2", "verdict", "warnings"},
             {}};
  for (const auto& [label, r] : reports) {
    std::string warnings;
    for (std::size_t k = 0; k < r.warnings.size(); ++k) warnings += (k ? "; " : "") + r.warnings[k];
    t.rows.push_back({label, to_string(r.primary.model), format_float(r.primary.a), format_float(r.primary.b),
                      format_float(r.primary.r2), to_string(r.competitor.model), format_float(r.competitor.a),
                      format_float(r.competitor.b), format_float(r.competitor.r2), format_float(r.delta_r2),
                      to_string(r.verdict), warnings});
  }
  return t;
}

CsvTable xxz_csv(const std::vector<XxzRow>& rows) {
  CsvTable t{"xxz",
             {"p", "N", "s_mean", "s_stderr", "mi_mean", "mi_stderr", "tmi_mean", "tmi_stderr", "kappa", "kappa_r2"},
             {}};
  for (const auto& r : rows) {
    t.rows.push_back({format_float(r.p), count(r.n_qubits), format_float(r.steady.s.mean),
                      format_float(r.steady.s.std_error), format_float(r.steady.mi.mean),
                      format_float(r.steady.mi.std_error), format_float(r.steady.tmi.mean),
                      format_float(r.steady.tmi.std_error), r.kappa.defined ? format_float(r.kappa.kappa) : "",
                      r.kappa.defined ? format_float(r.kappa.r2) : ""});
  }
  return t;
}

CsvTable crossings_csv(const std::vector<CrossingRow>& rows) {
  CsvTable t{"crossings",
             {"alpha", "density", "N", "m2", "cut", "layers", "expected_per_layer", "observed_per_layer", "z"},
             {}};
  for (const auto& r : rows) {
    t.rows.push_back({format_float(r.alpha), format_float(r.density), count(r.n_qubits), count(r.m2), count(r.cut),
                      count(r.layers), format_float(r.expected_per_layer), format_float(r.observed_per_layer),
                      format_float(r.z)});
  }
  return t;
}

}  // namespace lrmoc
