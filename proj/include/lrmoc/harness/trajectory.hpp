#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "lrmoc/circuit/sampler.hpp"
#include "lrmoc/core/execution.hpp"
#include "lrmoc/core/tableau.hpp"
#include "lrmoc/harness/config.hpp"
#include "lrmoc/observables/observables.hpp"

namespace lrmoc {

struct TrajectorySeries {
  std::uint64_t trajectory_id = 0;
  std::vector<std::size_t> layers;
  std::vector<ObservableSet> values;

  friend bool operator==(const TrajectorySeries&, const TrajectorySeries&) = default;
};

/// Ordered by trajectory id.
using Ensemble = std::vector<TrajectorySeries>;

/// Called at each checkpoint with its index, layer count and the state.
using CheckpointVisitor = std::function<void(std::size_t, std::size_t, const StabilizerTableau&)>;

void apply_layer(StabilizerTableau& state, const CircuitLayer& layer, RandomStream& rng);

/// Initial state for the config: |+>^N, or the ancilla-seeded state.
StabilizerTableau initial_state(const ExperimentConfig& config);

/// Evolves one trajectory for the full depth on the stream derived from
/// (seed, trajectory_id). Packing failures are rethrown with context.
void evolve_trajectory(const ExperimentConfig& config, std::uint64_t trajectory_id, const CheckpointVisitor& visit);

TrajectorySeries run_trajectory(const ExperimentConfig& config, std::uint64_t trajectory_id);

/// Trajectories 0..n_trajectories-1; identical for both execution modes.
Ensemble run_ensemble(const ExperimentConfig& config, Execution exec = Execution::Parallel);

/// Runs body(k) for k in [0, count) in any order and rethrows the first
/// exception after all iterations finish.
void for_each_index(std::size_t count, Execution exec, const std::function<void(std::size_t)>& body);

struct PurificationRecord {
  std::uint64_t trajectory_id = 0;
  /// First layer after which the ancilla is pure; depth when censored.
  std::size_t purified_at = 0;
  bool censored = false;
};

/// Ancilla-seeded trajectory checked after every layer, stopping once pure.
PurificationRecord run_purification_trajectory(const ExperimentConfig& config, std::uint64_t trajectory_id);

std::vector<PurificationRecord> run_purification_ensemble(const ExperimentConfig& config,
                                                          Execution exec = Execution::Parallel);

/// Fraction of trajectories still entangled with the ancilla after t layers,
/// t = 0..depth. Equals the ensemble mean of S_a in bits.
std::vector<double> ancilla_survival(const std::vector<PurificationRecord>& records, std::size_t depth);

}  // namespace lrmoc
