#include "lrmoc/harness/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lrmoc {

ExperimentConfig with_size(const ExperimentConfig& base, std::size_t n_qubits) {
  ExperimentConfig c = base;
  c.n_qubits = n_qubits;
  return c;
}

SizeEstimate estimate_size(const Ensemble& ensemble, std::size_t n_qubits, std::size_t window) {
  SizeEstimate e;
  e.n_qubits = n_qubits;
  e.s = steady_state(ensemble, Observable::HalfEntropy, window);
  e.mi = steady_state(ensemble, Observable::AntipodalMI, window);
  e.tmi = steady_state(ensemble, Observable::Tmi, window);
  return e;
}

EntanglementScan entanglement_scan(const ExperimentConfig& base, std::span<const std::size_t> sizes, Execution exec) {
  EntanglementScan scan;
  std::vector<ScalingPoint> points;
  for (std::size_t n : sizes) {
    const auto config = with_size(base, n);
    const auto ensemble = run_ensemble(config, exec);
    scan.sizes.push_back(estimate_size(ensemble, n, config.window));
    points.push_back({static_cast<double>(n), scan.sizes.back().s.mean, false});
  }
  scan.report = classify_entanglement(points);
  return scan;
}

PurificationSize purification_size(const ExperimentConfig& config, Execution exec) {
  PurificationSize out;
  out.n_qubits = config.n_qubits;
  out.depth = config.resolved_depth();
  const auto records = run_purification_ensemble(config, exec);
  for (const auto& r : records) out.censored_trajectories += r.censored;
  out.survival = ancilla_survival(records, out.depth);
  // Trim the all-purified tail; it carries no information for the fit.
  std::size_t end = out.survival.size();
  while (end > 1 && out.survival[end - 1] == 0.0 && out.survival[end - 2] == 0.0) --end;
  out.survival.resize(end);
  std::vector<double> t(out.survival.size());
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = static_cast<double>(k);
  out.fit = fit_exponential_decay(t, out.survival);
  return out;
}

PurificationStudy purification_study(const ExperimentConfig& base, std::span<const std::size_t> sizes,
                                     Execution exec) {
  PurificationStudy study;
  std::vector<ScalingPoint> points;
  for (std::size_t n : sizes) {
    study.sizes.push_back(purification_size(with_size(base, n), exec));
    const auto& fit = study.sizes.back().fit;
    points.push_back({static_cast<double>(n), fit.tau, fit.censored || !std::isfinite(fit.tau)});
  }
  study.report = classify_purification(points, base.sparse());
  return study;
}

TssSize tss_from_ensemble(const Ensemble& ensemble, const ExperimentConfig& config, double band) {
  TssSize out;
  out.n_qubits = config.n_qubits;
  out.steady = steady_state(ensemble, Observable::AbsTmi, config.window);
  std::vector<double> times;
  for (const auto& series : ensemble) {
    const auto t = time_to_steady_state(series, Observable::AbsTmi, out.steady, band, config.settle_rule);
    out.absolute_band = out.absolute_band || t.absolute_band;
    if (t.layer) {
      times.push_back(static_cast<double>(*t.layer));
    } else {
      ++out.never_settled;
    }
  }
  out.t_ss = summarize(times);
  return out;
}

TssSize tss_size(const ExperimentConfig& config, double band, Execution exec) {
  return tss_from_ensemble(run_ensemble(config, exec), config, band);
}

FitReport classify_tss_sizes(const std::vector<TssSize>& sizes, bool sparse_limit) {
  FitReport report;
  std::vector<ScalingPoint> points;
  for (const auto& s : sizes) {
    if (s.t_ss.count == 0) report.warnings.push_back("no trajectory settled at N=" + std::to_string(s.n_qubits));
    points.push_back({static_cast<double>(s.n_qubits), s.t_ss.mean, false});
  }
  if (!report.warnings.empty()) return report;
  return classify_tss(points, sparse_limit);
}

TssStudy tss_study(const ExperimentConfig& base, std::span<const std::size_t> sizes, double band, Execution exec) {
  TssStudy study;
  for (std::size_t n : sizes) study.sizes.push_back(tss_size(with_size(base, n), band, exec));
  study.report = classify_tss_sizes(study.sizes, base.sparse());
  return study;
}

namespace {

/// Translation-averaged I(q_x; q_{x+r}) for r = 1..N/2 on the first n sites.
std::vector<double> profile_of(const StabilizerTableau& state, std::size_t n) {
  std::vector<int> single(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t site[1] = {x};
    single[x] = state.entropy(site);
  }
  std::vector<double> out(n / 2, 0.0);
  for (std::size_t r = 1; r <= n / 2; ++r) {
    double sum = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t y = (x + r) % n;
      if (single[x] == 0 || single[y] == 0) continue;
      const std::size_t pair[2] = {std::min(x, y), std::max(x, y)};
      sum += single[x] + single[y] - state.entropy(pair);
    }
    out[r - 1] = sum / static_cast<double>(n);
  }
  return out;
}

}  // namespace

MiProfile mi_decay_profile(const ExperimentConfig& config, Execution exec) {
  config.validate();
  const std::size_t n = config.n_qubits;
  const std::size_t checkpoints = config.resolved_checkpoints();
  const std::size_t first = checkpoints - config.window;
  std::vector<std::vector<double>> per_trajectory(config.n_trajectories, std::vector<double>(n / 2, 0.0));
  for_each_index(config.n_trajectories, exec, [&](std::size_t k) {
    auto& acc = per_trajectory[k];
    evolve_trajectory(config, k, [&](std::size_t index, std::size_t, const StabilizerTableau& state) {
      if (index < first) return;
      const auto p = profile_of(state, n);
      for (std::size_t r = 0; r < p.size(); ++r) acc[r] += p[r] / static_cast<double>(config.window);
    });
  });

  MiProfile out;
  out.mean.resize(n / 2);
  out.std_error.resize(n / 2);
  std::vector<double> column(config.n_trajectories);
  for (std::size_t r = 0; r < n / 2; ++r) {
    for (std::size_t k = 0; k < config.n_trajectories; ++k) column[k] = per_trajectory[k][r];
    const auto s = summarize(column);
    out.mean[r] = s.mean;
    out.std_error[r] = s.std_error;
  }
  out.all_zero = std::all_of(out.mean.begin(), out.mean.end(), [](double v) { return v == 0.0; });
  if (!out.all_zero) out.fit = fit_power_law(out.mean, config.kappa_r_min, config.resolved_kappa_r_max());
  return out;
}

std::vector<double> mean_bell_census(const Ensemble& ensemble, std::size_t window) {
  if (ensemble.empty()) return {};
  std::vector<double> out;
  std::size_t samples = 0;
  for (const auto& series : ensemble) {
    if (window > series.values.size()) throw std::invalid_argument("window exceeds the recorded checkpoints");
    for (std::size_t k = series.values.size() - window; k < series.values.size(); ++k) {
      const auto& h = series.values[k].bell_histogram;
      if (out.empty()) out.assign(h.size(), 0.0);
      if (h.size() != out.size()) throw std::invalid_argument("series has no Bell census");
      for (std::size_t r = 0; r < h.size(); ++r) out[r] += static_cast<double>(h[r]);
      ++samples;
    }
  }
  for (auto& v : out) v /= static_cast<double>(samples);
  return out;
}

DepthGuardReport depth_guard(const ExperimentConfig& config, Observable obs, Execution exec) {
  config.validate();
  const std::size_t depth = config.resolved_depth();
  if (depth < 2) throw std::invalid_argument("depth guard needs at least two layers");
  ExperimentConfig half = config;
  half.depth = depth / 2;
  half.n_checkpoints = std::min(config.resolved_checkpoints(), depth / 2);
  half.window = std::min(config.window, half.n_checkpoints);
  half.seed = config.seed ^ 0x9e3779b97f4a7c15ULL;

  DepthGuardReport r;
  r.full = steady_state(run_ensemble(config, exec), obs, config.window);
  r.half = steady_state(run_ensemble(half, exec), obs, half.window);
  r.comparison = compare_estimates(r.half, r.full);
  r.sufficient = r.comparison.consistent;
  if (!r.sufficient) {
    r.warning = "depth insufficient: " + to_string(obs) + " differs by " + std::to_string(r.comparison.sigmas) +
                " standard errors between depth " + std::to_string(depth / 2) + " and " + std::to_string(depth);
  }
  return r;
}

}  // namespace lrmoc
