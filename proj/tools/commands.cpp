#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lrmoc/circuit/sampler.hpp"
#include "lrmoc/harness/analysis.hpp"
#include "lrmoc/harness/sweep.hpp"
#include "lrmoc/io/config_file.hpp"
#include "lrmoc/io/csv.hpp"
#include "lrmoc/io/io_error.hpp"
#include "lrmoc/io/manifest.hpp"
#include "lrmoc/oracle/equivalence.hpp"
#include "lrmoc/replica/effective_gate.hpp"
#include "lrmoc/replica/measurement_weight.hpp"
#include "lrmoc/replica/permutation.hpp"
#include "lrmoc/replica/weingarten.hpp"

namespace lrmoc::cli {

namespace {

constexpr const char* kManifest = "manifest.json";

std::vector<ExperimentConfig> load(const std::filesystem::path& config, const CommonOptions& opts) {
  return parse_config(config, ParseOptions{opts.max_cells});
}

void prepare_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());
}

std::string describe(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "basis=" << to_string(c.basis.kind);
  if (c.basis.kind == BasisModeKind::Xxz) out << " p=" << format_shortest(c.basis.p);
  out << " alpha=" << format_shortest(c.alpha) << " density=" << format_shortest(c.density) << " N=" << c.n_qubits;
  return out.str();
}

std::string describe_cell(const SweepCell& cell) {
  std::ostringstream out;
  out << "basis=" << to_string(cell.base.basis.kind);
  if (cell.base.basis.kind == BasisModeKind::Xxz) out << " p=" << format_shortest(cell.base.basis.p);
  out << " alpha=" << format_shortest(cell.base.alpha) << " density=" << format_shortest(cell.base.density)
      << " N=";
  for (std::size_t k = 0; k < cell.sizes.size(); ++k) out << (k ? ";" : "") << cell.sizes[k];
  return out.str();
}

class Output {
 public:
  Output(const std::filesystem::path& dir, RunManifest manifest) : dir_(dir), manifest_(std::move(manifest)) {
    prepare_dir(dir_);
  }

  void csv(const std::string& name, const CsvTable& table) {
    write_csv(dir_ / name, table, kManifest);
    manifest_.outputs.push_back(name);
  }

  void cell(const std::string& description, const std::string& status) {
    manifest_.cells.push_back({description, status});
  }

  void finish() {
    manifest_.finished_at = utc_timestamp();
    write_manifest(dir_ / kManifest, manifest_);
  }

 private:
  std::filesystem::path dir_;
  RunManifest manifest_;
};

}  // namespace

int run_sweep(const std::filesystem::path& config, const CommonOptions& opts) {
  const auto grid = load(config, opts);
  Output out(opts.out_dir, make_manifest("sweep", grid));
  const auto cells = group_cells(grid);
  const auto table = sweep(grid, opts.exec);
  std::vector<std::pair<std::string, FitReport>> fits;
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    const auto& row = table.rows[k];
    out.cell(describe_cell(cells[k]), row.status);
    if (row.entanglement) fits.emplace_back("entanglement " + describe_cell(cells[k]), *row.entanglement);
    if (row.purification) fits.emplace_back("purification " + describe_cell(cells[k]), *row.purification);
    std::cout << describe_cell(cells[k]) << ": " << row.status;
    if (row.entanglement) std::cout << ", entanglement " << to_string(row.entanglement->verdict);
    if (row.purification) std::cout << ", purification " << to_string(row.purification->verdict);
    std::cout << '\n';
  }
  out.csv("phase_diagram.csv", phase_diagram_csv(table));
  out.csv("steady_state.csv", steady_state_csv(table));
  out.csv("fit_report.csv", fit_report_csv(fits));
  out.finish();
  return kOk;
}

int run_trajectory(const std::filesystem::path& config, const CommonOptions& opts) {
  const auto grid = load(config, opts);
  Output out(opts.out_dir, make_manifest("trajectory", grid));
  const auto cells = group_cells(grid);
  std::vector<std::vector<TssSize>> settle(cells.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto ensemble = run_ensemble(grid[k], opts.exec);
    const std::string suffix = "_" + std::to_string(k) + ".csv";
    out.csv("time_series" + suffix, time_series_csv(ensemble));
    if (grid[k].observables.bell) {
      out.csv("bell_census" + suffix, bell_census_csv(mean_bell_census(ensemble, grid[k].window)));
    }
    if (grid[k].observables.tmi) {
      auto key = grid[k];
      key.n_qubits = 0;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        auto other = cells[c].base;
        other.n_qubits = 0;
        if (other == key) settle[c].push_back(tss_from_ensemble(ensemble, grid[k]));
      }
    }
    out.cell(describe(grid[k]), "ok");
    std::cout << describe(grid[k]) << ": " << ensemble.size() << " trajectories\n";
  }
  std::vector<std::pair<std::string, FitReport>> fits;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    auto& sizes = settle[c];
    if (sizes.empty()) continue;
    std::sort(sizes.begin(), sizes.end(), [](const TssSize& a, const TssSize& b) { return a.n_qubits < b.n_qubits; });
    out.csv("tss_" + std::to_string(c) + ".csv", tss_csv(sizes));
    if (sizes.size() < 4) continue;
    try {
      const auto report = classify_tss_sizes(sizes, cells[c].base.sparse());
      fits.emplace_back("t_ss " + describe_cell(cells[c]), report);
      std::cout << describe_cell(cells[c]) << ": t_ss " << to_string(report.verdict) << '\n';
    } catch (const FitError& e) {
      std::cout << describe_cell(cells[c]) << ": t_ss fit failed: " << e.what() << '\n';
    }
  }
  if (!fits.empty()) out.csv("fit_report.csv", fit_report_csv(fits));
  out.finish();
  return kOk;
}

int run_purify(const std::filesystem::path& config, const CommonOptions& opts) {
  const auto grid = load(config, opts);
  Output out(opts.out_dir, make_manifest("purify", grid));
  std::vector<std::pair<std::string, FitReport>> fits;
  const auto cells = group_cells(grid);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    std::vector<PurificationSize> sizes;
    std::string status = "ok";
    try {
      if (cells[k].sizes.size() >= 4) {
        auto study = purification_study(cells[k].base, cells[k].sizes, opts.exec);
        fits.emplace_back(describe_cell(cells[k]), study.report);
        sizes = std::move(study.sizes);
      } else {
        for (std::size_t n : cells[k].sizes) sizes.push_back(purification_size(with_size(cells[k].base, n), opts.exec));
      }
    } catch (const FitError& e) {
      status = std::string("error: ") + e.what();
    }
    const std::string suffix = "_" + std::to_string(k) + ".csv";
    out.csv("purification_tau" + suffix, purification_tau_csv(sizes));
    out.csv("purification_survival" + suffix, purification_survival_csv(sizes));
    out.cell(describe_cell(cells[k]), status);
    std::cout << describe_cell(cells[k]) << ": " << status;
    for (const auto& s : sizes) std::cout << " tau(" << s.n_qubits << ")=" << s.fit.tau << (s.fit.censored ? "+" : "");
    std::cout << '\n';
  }
  out.csv("fit_report.csv", fit_report_csv(fits));
  out.finish();
  return kOk;
}

int run_xxz(const std::filesystem::path& config, const CommonOptions& opts) {
  const auto grid = load(config, opts);
  Output out(opts.out_dir, make_manifest("xxz", grid));
  std::vector<XxzRow> rows;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto& c = grid[k];
    XxzRow row;
    row.p = c.basis.p;
    row.n_qubits = c.n_qubits;
    row.steady = estimate_size(run_ensemble(c, opts.exec), c.n_qubits, c.window);
    const auto profile = mi_decay_profile(c, opts.exec);
    row.kappa = profile.fit;
    out.csv("mi_profile_" + std::to_string(k) + ".csv", mi_profile_csv(profile));
    out.cell(describe(c), "ok");
    std::cout << describe(c) << ": S=" << row.steady.s.mean << " I=" << row.steady.mi.mean
              << " I3=" << row.steady.tmi.mean;
    if (row.kappa.defined) std::cout << " kappa=" << row.kappa.kappa;
    std::cout << '\n';
    rows.push_back(row);
  }
  out.csv("xxz.csv", xxz_csv(rows));
  out.finish();
  return kOk;
}

int run_crossings(const std::filesystem::path& config, std::size_t layers, const CommonOptions& opts) {
  const auto grid = load(config, opts);
  Output out(opts.out_dir, make_manifest("crossings", grid));
  std::vector<CrossingRow> rows;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto& c = grid[k];
    const CircuitSampler sampler(c.n_qubits, c.alpha, c.m2(), c.basis);
    auto rng = derive_stream(c.seed, k);
    CrossingRow row;
    row.alpha = c.alpha;
    row.density = c.density;
    row.n_qubits = c.n_qubits;
    row.m2 = c.m2();
    row.cut = c.n_qubits / 2;
    row.layers = layers;
    row.expected_per_layer = expected_crossings(c.n_qubits, c.alpha, row.m2);
    const auto total = count_crossings_mc(sampler, row.cut, layers, rng);
    row.observed_per_layer = static_cast<double>(total) / static_cast<double>(layers);
    const double expected_total = row.expected_per_layer * static_cast<double>(layers);
    row.z = (static_cast<double>(total) - expected_total) / std::sqrt(expected_total);
    rows.push_back(row);
    out.cell(describe(c), "ok");
    std::cout << describe(c) << ": expected " << row.expected_per_layer << ", observed " << row.observed_per_layer
              << " per layer (z = " << row.z << ")\n";
  }
  out.csv("crossings.csv", crossings_csv(rows));
  out.finish();
  return kOk;
}

int run_statmech_check() {
  bool ok = true;
  for (std::size_t n : {2u, 3u}) {
    const auto all = Permutation::all(n);
    for (std::uint64_t d : {2u, 3u}) {
      std::size_t equal = 0;
      std::size_t total = 0;
      for (const auto& s1 : all)
        for (const auto& s2 : all)
          for (const auto& t1 : all)
            for (const auto& t2 : all) {
              ++total;
              const auto w = wm_weight(s1, s2, t1, t2, d);
              equal += w == wm_bruteforce(s1, s2, t1, t2, d) && w == wm_weight_alt(s1, s2, t1, t2, d);
            }
      std::cout << "W_M n=" << n << " d=" << d << ": " << equal << "/" << total << " equal\n";
      ok = ok && equal == total;
    }
  }
  for (std::size_t n : {1u, 2u, 3u}) {
    for (std::size_t d : {2u, 3u, 4u}) {
      try {
        const WeingartenTable wg(n, d);
        const bool inverse = (wg.gram() * wg.matrix()).is_identity();
        std::cout << "Weingarten n=" << n << " d=" << d << ": G Wg = I " << (inverse ? "holds" : "FAILS") << '\n';
        ok = ok && inverse;
      } catch (const SingularGramError&) {
        std::cout << "Weingarten n=" << n << " d=" << d << ": Gram matrix singular (d < n), no exact inverse\n";
      }
    }
  }
  try {
    const auto gate = effective_gate_projection();
    std::cout << "effective gate: C=" << gate.c << " J=" << gate.j << " residual=" << gate.residual << '\n';
  } catch (const std::runtime_error& e) {
    std::cout << "effective gate: " << e.what() << '\n';
    ok = false;
  }
  if (!ok) {
    std::cerr << "error[check]: replica identity suite failed\n";
    return kCheckFailed;
  }
  return kOk;
}

int run_verify(std::size_t n_max, std::size_t circuits, std::uint64_t seed) {
  const auto report = verify_against_oracle(n_max, circuits, seed);
  std::cout << "circuits " << report.circuits << ", measurements " << report.measurements << ", entropy checks "
            << report.entropy_checks << ", mismatches " << report.mismatches << ", max entropy error "
            << report.max_entropy_error << '\n';
  for (const auto& f : report.failures) std::cout << "  " << f << '\n';
  if (report.mismatches != 0) {
    std::cerr << "error[check]: " << report.mismatches << " mismatches against the dense oracle\n";
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace lrmoc::cli
