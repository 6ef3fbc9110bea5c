#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lrmoc/harness/config.hpp"
#include "lrmoc/harness/fits.hpp"
#include "lrmoc/harness/statistics.hpp"
#include "lrmoc/harness/trajectory.hpp"

namespace lrmoc {

/// Copy of base with n_qubits replaced.
ExperimentConfig with_size(const ExperimentConfig& base, std::size_t n_qubits);

struct SizeEstimate {
  std::size_t n_qubits = 0;
  SteadyStateEstimate s;
  SteadyStateEstimate mi;
  SteadyStateEstimate tmi;
};

SizeEstimate estimate_size(const Ensemble& ensemble, std::size_t n_qubits, std::size_t window);

struct EntanglementScan {
  std::vector<SizeEstimate> sizes;
  FitReport report;
};

/// Steady-state S at each size, then the linear-vs-log contest.
EntanglementScan entanglement_scan(const ExperimentConfig& base, std::span<const std::size_t> sizes,
                                   Execution exec = Execution::Parallel);

struct PurificationSize {
  std::size_t n_qubits = 0;
  std::size_t depth = 0;
  std::vector<double> survival;
  DecayFit fit;
  std::size_t censored_trajectories = 0;
};

PurificationSize purification_size(const ExperimentConfig& config, Execution exec = Execution::Parallel);

struct PurificationStudy {
  std::vector<PurificationSize> sizes;
  FitReport report;
};

PurificationStudy purification_study(const ExperimentConfig& base, std::span<const std::size_t> sizes,
                                     Execution exec = Execution::Parallel);

struct TssSize {
  std::size_t n_qubits = 0;
  SteadyStateEstimate steady;
  /// Over trajectories that reach the band.
  SampleSummary t_ss;
  std::size_t never_settled = 0;
  bool absolute_band = false;
};

/// Time to steady state of |I3| per trajectory under config.settle_rule,
/// averaged over the ensemble.
TssSize tss_from_ensemble(const Ensemble& ensemble, const ExperimentConfig& config, double band = 0.01);

TssSize tss_size(const ExperimentConfig& config, double band = 0.01, Execution exec = Execution::Parallel);

/// classify_tss on the ensemble means; Indeterminate with a warning per size
/// at which no trajectory settled.
FitReport classify_tss_sizes(const std::vector<TssSize>& sizes, bool sparse_limit);

struct TssStudy {
  std::vector<TssSize> sizes;
  FitReport report;
};

TssStudy tss_study(const ExperimentConfig& base, std::span<const std::size_t> sizes, double band = 0.01,
                   Execution exec = Execution::Parallel);

struct MiProfile {
  /// Index r - 1 for r = 1..N/2.
  std::vector<double> mean;
  std::vector<double> std_error;
  PowerLawFit fit;
  /// True when every entry is zero.
  bool all_zero = false;
};

/// Mean I(q_x; q_{x+r}) over trajectories, the final window checkpoints and
/// all base sites x, with a power-law fit over the configured r window.
MiProfile mi_decay_profile(const ExperimentConfig& config, Execution exec = Execution::Parallel);

/// Mean Bell-census histogram over trajectories and the final window checkpoints.
std::vector<double> mean_bell_census(const Ensemble& ensemble, std::size_t window);

struct DepthGuardReport {
  SteadyStateEstimate half;
  SteadyStateEstimate full;
  TwoSampleComparison comparison;
  bool sufficient = true;
  std::string warning;
};

/// Runs the ensemble at half and at full depth on independent streams and
/// flags a depth-insufficiency warning when the steady values differ by
/// more than three standard errors.
DepthGuardReport depth_guard(const ExperimentConfig& config, Observable obs, Execution exec = Execution::Parallel);

}  // namespace lrmoc
