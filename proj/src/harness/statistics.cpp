#include "lrmoc/harness/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lrmoc {

std::string to_string(Observable obs) {
  switch (obs) {
    case Observable::HalfEntropy: return "s";
    case Observable::AntipodalMI: return "mi";
    case Observable::Tmi: return "tmi";
    case Observable::AbsTmi: return "abs_tmi";
    case Observable::AncillaEntropy: return "s_ancilla";
  }
  return "?";
}

double observable_value(const ObservableSet& set, Observable obs) {
  switch (obs) {
    case Observable::HalfEntropy: return set.s_half;
    case Observable::AntipodalMI: return set.mi_antipodal;
    case Observable::Tmi: return set.tmi;
    case Observable::AbsTmi: return std::abs(set.tmi);
    case Observable::AncillaEntropy:
      if (!set.s_ancilla) throw std::invalid_argument("series has no ancilla entropy");
      return *set.s_ancilla;
  }
  return 0.0;
}

SampleSummary summarize(std::span<const double> values) {
  SampleSummary s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.std_error = std::sqrt(ss / static_cast<double>(values.size() - 1) / static_cast<double>(values.size()));
  }
  return s;
}

SteadyStateEstimate steady_state(const Ensemble& ensemble, Observable obs, std::size_t window) {
  if (ensemble.size() < 2) throw std::invalid_argument("steady state needs at least two trajectories");
  if (window == 0) throw std::invalid_argument("steady-state window must be positive");
  std::vector<double> per_trajectory;
  per_trajectory.reserve(ensemble.size());
  for (const auto& series : ensemble) {
    if (window > series.values.size()) {
      throw std::invalid_argument("window of " + std::to_string(window) + " exceeds the " +
                                  std::to_string(series.values.size()) + " recorded checkpoints");
    }
    double sum = 0.0;
    for (std::size_t k = series.values.size() - window; k < series.values.size(); ++k) {
      sum += observable_value(series.values[k], obs);
    }
    per_trajectory.push_back(sum / static_cast<double>(window));
  }
  const auto s = summarize(per_trajectory);
  return {s.mean, s.std_error, window, ensemble.size()};
}

std::vector<double> ensemble_mean_series(const Ensemble& ensemble, Observable obs) {
  if (ensemble.empty()) return {};
  std::vector<double> out(ensemble.front().values.size(), 0.0);
  for (const auto& series : ensemble) {
    if (series.values.size() != out.size()) throw std::invalid_argument("ragged ensemble");
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += observable_value(series.values[k], obs);
  }
  for (auto& v : out) v /= static_cast<double>(ensemble.size());
  return out;
}

TwoSampleComparison compare_estimates(const SteadyStateEstimate& a, const SteadyStateEstimate& b, double threshold) {
  TwoSampleComparison c;
  c.difference = a.mean - b.mean;
  c.std_error = std::hypot(a.std_error, b.std_error);
  if (c.std_error > 0.0) {
    c.sigmas = std::abs(c.difference) / c.std_error;
  } else {
    c.sigmas = c.difference == 0.0 ? 0.0 : INFINITY;
  }
  c.consistent = c.sigmas <= threshold;
  return c;
}

std::string to_string(SettleRule rule) {
  return rule == SettleRule::Sustained ? "sustained" : "first_entry";
}

SteadyStateTime time_to_steady_state(std::span<const std::size_t> layers, std::span<const double> values,
                                     double steady, double band, SettleRule rule) {
  if (layers.size() != values.size()) throw std::invalid_argument("layers and values differ in length");
  SteadyStateTime out;
  double width = band * std::abs(steady);
  if (steady == 0.0) {
    out.absolute_band = true;
    double peak = 0.0;
    for (double v : values) peak = std::max(peak, std::abs(v));
    width = band * peak;
  }
  if (rule == SettleRule::FirstEntry) {
    if (values.empty()) return out;
    const bool below = values[0] < steady;
    for (std::size_t k = 0; k < values.size(); ++k) {
      const bool crossed = below ? values[k] > steady : values[k] < steady;
      if (std::abs(values[k] - steady) <= width || crossed) {
        out.layer = layers[k];
        break;
      }
    }
    return out;
  }
  // Scan backwards for the start of the final in-band run.
  std::size_t start = values.size();
  while (start > 0 && std::abs(values[start - 1] - steady) <= width) --start;
  if (start < values.size()) out.layer = layers[start];
  return out;
}

SteadyStateTime time_to_steady_state(const TrajectorySeries& series, Observable obs, const SteadyStateEstimate& steady,
                                     double band, SettleRule rule) {
  std::vector<double> values;
  values.reserve(series.values.size());
  for (const auto& v : series.values) values.push_back(observable_value(v, obs));
  return time_to_steady_state(series.layers, values, steady.mean, band, rule);
}

}  // namespace lrmoc
