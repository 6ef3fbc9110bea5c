#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "lrmoc/harness/analysis.hpp"
#include "lrmoc/harness/sweep.hpp"

namespace lrmoc {

/// Version tag written in every CSV header comment.
inline constexpr int kCsvSchemaVersion = 1;

struct CsvTable {
  /// Schema name, e.g. "phase_diagram".
  std::string schema;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// 17 significant digits; "nan" and "inf" for non-finite values.
std::string format_float(double value);

/// Header comment line, column row, then data rows. Fields containing
/// commas or quotes are quoted.
std::string render_csv(const CsvTable& table, const std::string& manifest_name);

/// IoError naming the path on failure.
void write_csv(const std::filesystem::path& path, const CsvTable& table, const std::string& manifest_name);

/// alpha, density, basis, p, N_list, s_mean, s_stderr, mi_mean, mi_stderr,
/// tmi_mean, tmi_stderr, tmi_sign, log_abs_tmi, dr2_entanglement,
/// dr2_purification, entanglement_verdict, purification_verdict, status.
CsvTable phase_diagram_csv(const PhaseDiagramTable& table);

/// alpha, density, basis, p, N, s_mean, s_stderr, mi_mean, mi_stderr,
/// tmi_mean, tmi_stderr; one row per cell and size.
CsvTable steady_state_csv(const PhaseDiagramTable& table);

/// trajectory_id, layer, s, mi, tmi, s_ancilla.
CsvTable time_series_csv(const Ensemble& ensemble);

/// r, mean_count for r = 1..N/2.
CsvTable bell_census_csv(const std::vector<double>& mean_counts);

/// r, mean_mi, mi_stderr.
CsvTable mi_profile_csv(const MiProfile& profile);

/// N, layer, survival.
CsvTable purification_survival_csv(const std::vector<PurificationSize>& sizes);

/// N, depth, tau, r2, points_used, censored, censored_trajectories.
CsvTable purification_tau_csv(const std::vector<PurificationSize>& sizes);

/// N, t_ss_mean, t_ss_stderr, settled, never_settled, steady_abs_tmi, absolute_band.
CsvTable tss_csv(const std::vector<TssSize>& sizes);

/// label, primary_model, primary_a, primary_b, primary_r2, competitor_model,
/// competitor_a, competitor_b, competitor_r2, delta_r2, verdict, warnings.
CsvTable fit_report_csv(const std::vector<std::pair<std::string, FitReport>>& reports);

struct XxzRow {
  double p = 0.0;
  std::size_t n_qubits = 0;
  SizeEstimate steady;
  PowerLawFit kappa;
};

/// p, N, s_mean, s_stderr, mi_mean, mi_stderr, tmi_mean, tmi_stderr, kappa, kappa_r2.
CsvTable xxz_csv(const std::vector<XxzRow>& rows);

struct CrossingRow {
  double alpha = 0.0;
  double density = 0.0;
  std::size_t n_qubits = 0;
  std::size_t m2 = 0;
  std::size_t cut = 0;
  std::size_t layers = 0;
  double expected_per_layer = 0.0;
  double observed_per_layer = 0.0;
  /// (observed - expected) total over the Poisson sigma of the total.
  double z = 0.0;
};

/// alpha, density, N, m2, cut, layers, expected_per_layer, observed_per_layer, z.
CsvTable crossings_csv(const std::vector<CrossingRow>& rows);

}  // namespace lrmoc
