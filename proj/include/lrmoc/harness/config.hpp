#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lrmoc/circuit/sampler.hpp"
#include "lrmoc/observables/observables.hpp"

namespace lrmoc {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Settling criterion for the time to steady state.
enum class SettleRule : std::uint8_t {
  /// Enter the band and stay in it for the rest of the series.
  Sustained,
  /// First checkpoint inside the band or past it, relative to the first value.
  FirstEntry,
};

/// One ensemble: circuit law, run length, sampling schedule and probes.
struct ExperimentConfig {
  std::size_t n_qubits = 16;
  double alpha = 0.0;
  /// M2 / N; 0 is the sparse limit with one check per layer.
  double density = 0.0;
  BasisMode basis = BasisMode::random();
  /// Layers; defaults to 2 N^2 / M2 capped at kMaxDefaultDepth.
  std::optional<std::size_t> depth;
  std::size_t n_checkpoints = 100;
  std::size_t n_trajectories = 1000;
  std::uint64_t seed = 0;
  bool purification = false;
  /// Final checkpoints averaged for steady-state values.
  std::size_t window = 20;
  ObservableSelection observables;
  /// r window of the mutual-information power-law fit; max defaults to N/4.
  std::size_t kappa_r_min = 2;
  std::optional<std::size_t> kappa_r_max;
  SettleRule settle_rule = SettleRule::Sustained;

  static constexpr std::size_t kMaxDefaultDepth = 200000;

  /// Throws ConfigError on the first violated constraint.
  void validate() const;

  std::size_t m2() const;
  std::size_t resolved_depth() const;
  /// Equals n_checkpoints, clamped to the depth when the depth is defaulted.
  std::size_t resolved_checkpoints() const;
  std::size_t resolved_kappa_r_max() const;
  /// floor((k+1) depth / n) for k = 0..n-1; strictly increasing, last = depth.
  std::vector<std::size_t> checkpoint_layers() const;

  bool sparse() const { return density == 0.0; }

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

}  // namespace lrmoc
