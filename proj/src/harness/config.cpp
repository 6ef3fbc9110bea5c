#include "lrmoc/harness/config.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lrmoc {

void ExperimentConfig::validate() const {
  if (n_qubits < 4 || n_qubits % 4 != 0) {
    throw ConfigError("N must be a positive multiple of 4, got " + std::to_string(n_qubits));
  }
  if (!(alpha >= 0.0)) throw ConfigError("alpha must be non-negative");
  if (!(density >= 0.0 && density <= 0.5)) throw ConfigError("density must lie in [0, 0.5]");
  if (!(basis.p >= 0.0 && basis.p <= 1.0)) throw ConfigError("p must lie in [0, 1]");
  if (n_checkpoints == 0) throw ConfigError("checkpoints must be positive");
  if (n_trajectories == 0) throw ConfigError("trajectories must be positive");
  if (depth) {
    if (*depth == 0) throw ConfigError("depth must be positive");
    if (*depth < n_checkpoints) {
      throw ConfigError("depth " + std::to_string(*depth) + " is smaller than the checkpoint count " +
                        std::to_string(n_checkpoints));
    }
  }
  if (window == 0 || window > resolved_checkpoints()) {
    throw ConfigError("steady-state window must lie in [1, checkpoints]");
  }
  if (kappa_r_min == 0 || kappa_r_min > resolved_kappa_r_max() || resolved_kappa_r_max() > n_qubits / 2) {
    throw ConfigError("kappa window must satisfy 1 <= r_min <= r_max <= N/2");
  }
}

std::size_t ExperimentConfig::m2() const { return measurements_per_layer(n_qubits, density); }

std::size_t ExperimentConfig::resolved_depth() const {
  if (depth) return *depth;
  const std::size_t full = 2 * n_qubits * n_qubits / m2();
  return std::clamp<std::size_t>(full, 1, kMaxDefaultDepth);
}

std::size_t ExperimentConfig::resolved_checkpoints() const {
  if (depth) return n_checkpoints;
  return std::min(n_checkpoints, resolved_depth());
}

std::size_t ExperimentConfig::resolved_kappa_r_max() const {
  return kappa_r_max ? *kappa_r_max : std::max<std::size_t>(n_qubits / 4, 1);
}

std::vector<std::size_t> ExperimentConfig::checkpoint_layers() const {
  const std::size_t t = resolved_depth();
  const std::size_t n = resolved_checkpoints();
  std::vector<std::size_t> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = static_cast<std::size_t>((static_cast<unsigned __int128>(k + 1) * t) / n);
  }
  return out;
}

}  // namespace lrmoc
