#include "lrmoc/harness/trajectory.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>

namespace lrmoc {

void apply_layer(StabilizerTableau& state, const CircuitLayer& layer, RandomStream& rng) {
  for (std::size_t k = 0; k < layer.pairs.size(); ++k) {
    state.measure_parity(layer.bases[k], layer.pairs[k].first, layer.pairs[k].second, rng);
  }
}

StabilizerTableau initial_state(const ExperimentConfig& config) {
  if (config.purification) return StabilizerTableau::ancilla_seeded(config.n_qubits, 0);
  return StabilizerTableau::plus_state(config.n_qubits);
}

namespace {

CircuitSampler make_sampler(const ExperimentConfig& config) {
  return CircuitSampler(config.n_qubits, config.alpha, config.m2(), config.basis);
}

CircuitLayer sample_with_context(const CircuitSampler& sampler, RandomStream& rng, std::uint64_t id,
                                 std::size_t layer) {
  try {
    return sampler.sample_layer(rng);
  } catch (const PackingError& e) {
    throw PackingError("trajectory " + std::to_string(id) + ", layer " + std::to_string(layer) + ": " + e.what());
  }
}

}  // namespace

void evolve_trajectory(const ExperimentConfig& config, std::uint64_t trajectory_id, const CheckpointVisitor& visit) {
  config.validate();
  const auto sampler = make_sampler(config);
  const auto checkpoints = config.checkpoint_layers();
  auto rng = derive_stream(config.seed, trajectory_id);
  auto state = initial_state(config);
  std::size_t next = 0;
  for (std::size_t t = 1; t <= config.resolved_depth(); ++t) {
    apply_layer(state, sample_with_context(sampler, rng, trajectory_id, t), rng);
    if (next < checkpoints.size() && checkpoints[next] == t) {
      visit(next, t, state);
      ++next;
    }
  }
}

TrajectorySeries run_trajectory(const ExperimentConfig& config, std::uint64_t trajectory_id) {
  TrajectorySeries out;
  out.trajectory_id = trajectory_id;
  auto select = config.observables;
  select.ancilla = select.ancilla || config.purification;
  evolve_trajectory(config, trajectory_id, [&](std::size_t, std::size_t layer, const StabilizerTableau& state) {
    out.layers.push_back(layer);
    out.values.push_back(measure_observables(state, config.n_qubits, select));
  });
  return out;
}

void for_each_index(std::size_t count, Execution exec, const std::function<void(std::size_t)>& body) {
#ifdef LRMOC_HAVE_OPENMP
  if (exec == Execution::Parallel) {
    std::exception_ptr failure;
    std::mutex guard;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(count); ++k) {
      try {
        body(static_cast<std::size_t>(k));
      } catch (...) {
        const std::lock_guard<std::mutex> lock(guard);
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t k = 0; k < count; ++k) body(k);
}

Ensemble run_ensemble(const ExperimentConfig& config, Execution exec) {
  config.validate();
  Ensemble out(config.n_trajectories);
  for_each_index(config.n_trajectories, exec, [&](std::size_t k) { out[k] = run_trajectory(config, k); });
  return out;
}

PurificationRecord run_purification_trajectory(const ExperimentConfig& config, std::uint64_t trajectory_id) {
  config.validate();
  const auto sampler = make_sampler(config);
  auto rng = derive_stream(config.seed, trajectory_id);
  auto state = StabilizerTableau::ancilla_seeded(config.n_qubits, 0);
  const std::size_t depth = config.resolved_depth();
  PurificationRecord rec{trajectory_id, depth, true};
  for (std::size_t t = 1; t <= depth; ++t) {
    apply_layer(state, sample_with_context(sampler, rng, trajectory_id, t), rng);
    // Checks on the system never re-entangle a pure ancilla.
    if (ancilla_entropy(state) == 0) {
      rec.purified_at = t;
      rec.censored = false;
      break;
    }
  }
  return rec;
}

std::vector<PurificationRecord> run_purification_ensemble(const ExperimentConfig& config, Execution exec) {
  config.validate();
  std::vector<PurificationRecord> out(config.n_trajectories);
  for_each_index(config.n_trajectories, exec,
                 [&](std::size_t k) { out[k] = run_purification_trajectory(config, k); });
  return out;
}

std::vector<double> ancilla_survival(const std::vector<PurificationRecord>& records, std::size_t depth) {
  if (records.empty()) throw std::invalid_argument("no purification records");
  // Each record is alive on [0, last]; accumulate via a difference array.
  std::vector<double> delta(depth + 2, 0.0);
  for (const auto& r : records) {
    const std::size_t last = r.censored ? depth : std::min(r.purified_at - 1, depth);
    delta[0] += 1.0;
    delta[last + 1] -= 1.0;
  }
  std::vector<double> alive(depth + 1);
  double running = 0.0;
  for (std::size_t t = 0; t <= depth; ++t) {
    running += delta[t];
    alive[t] = running / static_cast<double>(records.size());
  }
  return alive;
}

}  // namespace lrmoc
