#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lrmoc {

struct EquivalenceReport {
  std::size_t circuits = 0;
  std::size_t measurements = 0;
  std::size_t entropy_checks = 0;
  std::size_t mismatches = 0;
  double max_entropy_error = 0.0;
  std::vector<std::string> failures;
};

/// Runs random measurement-only circuits on N in [2, n_max] qubits through
/// the tableau and the dense oracle with paired outcomes. After every layer,
/// compares all proper bipartition entropies and checks that the oracle's
/// Born probability is 1/2 for random outcomes and 0/1 for deterministic ones.
EquivalenceReport verify_against_oracle(std::size_t n_max, std::size_t circuits, std::uint64_t seed,
                                        double tolerance = 1e-9);

}  // namespace lrmoc
