#pragma once

#include <cstddef>
#include <vector>

#include "lrmoc/circuit/sampler.hpp"
#include "lrmoc/core/rng.hpp"
#include "lrmoc/core/subsystem.hpp"

namespace lrmoc {

struct ReplicaEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Monte Carlo estimate of Z_A / Z_empty for n replicas: every layer applies an
/// independent Haar unitary to each qubit, then the layer's pairs as ZZ
/// checks. Each sample sums Tr(rho~_A^n) and Tr(rho~)^n over all outcome
/// branches of the unnormalized state; the estimate is the ratio of sample
/// means with a delete-one jackknife error. N <= 4, at most 3 layers.
ReplicaEstimate haar_mc_replica(std::size_t n_qubits, const std::vector<CircuitLayer>& layers,
                                const SubsystemMask& region, std::size_t n, std::size_t samples,
                                RandomStream& rng);

}  // namespace lrmoc
