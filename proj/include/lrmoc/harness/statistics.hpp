#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lrmoc/harness/trajectory.hpp"

namespace lrmoc {

enum class Observable : std::uint8_t { HalfEntropy, AntipodalMI, Tmi, AbsTmi, AncillaEntropy };

std::string to_string(Observable obs);

double observable_value(const ObservableSet& set, Observable obs);

struct SteadyStateEstimate {
  double mean = 0.0;
  /// Standard error from the spread of per-trajectory window means.
  double std_error = 0.0;
  std::size_t window = 0;
  std::size_t trajectories = 0;
};

/// Mean over trajectories x the final `window` checkpoints.
SteadyStateEstimate steady_state(const Ensemble& ensemble, Observable obs, std::size_t window = 20);

/// Ensemble mean at each checkpoint.
std::vector<double> ensemble_mean_series(const Ensemble& ensemble, Observable obs);

struct TwoSampleComparison {
  double difference = 0.0;
  double std_error = 0.0;
  /// |difference| / std_error; 0 when both errors vanish and the means agree.
  double sigmas = 0.0;
  bool consistent = true;
};

/// Independent-sample z test on two estimates.
TwoSampleComparison compare_estimates(const SteadyStateEstimate& a, const SteadyStateEstimate& b,
                                      double threshold = 3.0);

struct SteadyStateTime {
  std::optional<std::size_t> layer;
  /// Set when the steady mean is zero and the band fell back to band * max|series|.
  bool absolute_band = false;
};

std::string to_string(SettleRule rule);

/// Layer at which the series settles within band * |steady| of the steady value.
SteadyStateTime time_to_steady_state(std::span<const std::size_t> layers, std::span<const double> values,
                                     double steady, double band = 0.01, SettleRule rule = SettleRule::Sustained);

SteadyStateTime time_to_steady_state(const TrajectorySeries& series, Observable obs,
                                     const SteadyStateEstimate& steady, double band = 0.01,
                                     SettleRule rule = SettleRule::Sustained);

struct SampleSummary {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t count = 0;
};

SampleSummary summarize(std::span<const double> values);

}  // namespace lrmoc
