#include "lrmoc/oracle/equivalence.hpp"

#include <cmath>
#include <stdexcept>

#include "lrmoc/circuit/sampler.hpp"
#include "lrmoc/core/tableau.hpp"
#include "lrmoc/oracle/dense_state.hpp"

namespace lrmoc {

namespace {

PauliString random_pauli(std::size_t n, RandomStream& rng) {
  PauliString p(n);
  while (p.is_identity()) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto v = uniform_index(rng, 4);
      p.set(k, v == 1 || v == 2, v == 2 || v == 3);
    }
  }
  return p;
}

}  // namespace

EquivalenceReport verify_against_oracle(std::size_t n_max, std::size_t circuits, std::uint64_t seed,
                                        double tolerance) {
  if (n_max < 2 || n_max > 10) throw std::invalid_argument("oracle comparison supports 2 <= N <= 10");
  EquivalenceReport report;
  const double alphas[] = {0.0, 1.0, 2.0, 4.0};
  const double densities[] = {0.0, 0.2, 0.5};
  for (std::size_t c = 0; c < circuits; ++c) {
    auto rng = derive_stream(seed, c);
    const std::size_t n = 2 + uniform_index(rng, n_max - 1);
    const double alpha = alphas[uniform_index(rng, 4)];
    const double density = densities[uniform_index(rng, 3)];
    const auto mode = static_cast<BasisModeKind>(uniform_index(rng, 3));
    const BasisMode basis{mode, mode == BasisModeKind::Xxz ? uniform01(rng) : 1.0 / 3.0};
    const CircuitSampler sampler(n, alpha, measurements_per_layer(n, density), basis);
    // Every fourth circuit mixes in general Pauli strings.
    const bool general = c % 4 == 3;
    const std::size_t depth = 1 + uniform_index(rng, 3 * n);

    auto tableau = StabilizerTableau::plus_state(n);
    auto dense = DenseState::plus_state(n);
    ++report.circuits;

    auto apply = [&](const PauliString& p, std::size_t layer) {
      const double prob = dense.probability_plus(p);
      const auto result = tableau.measure(p, rng);
      ++report.measurements;
      const double expected = result.deterministic ? (result.outcome == 1 ? 1.0 : 0.0) : 0.5;
      if (std::abs(prob - expected) > tolerance) {
        ++report.mismatches;
        report.failures.push_back("circuit " + std::to_string(c) + " layer " + std::to_string(layer) +
                                  ": Born probability " + std::to_string(prob) + " for " + p.to_string());
      }
      dense.project(p, result.outcome);
    };

    for (std::size_t t = 0; t < depth; ++t) {
      if (general && random_bit(rng)) {
        apply(random_pauli(n, rng), t);
      } else {
        const auto layer = sampler.sample_layer(rng);
        for (std::size_t k = 0; k < layer.size(); ++k) {
          apply(PauliString::two_site(n, layer.bases[k], layer.pairs[k].first, layer.pairs[k].second), t);
        }
      }
      for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::size_t> region;
        for (std::size_t k = 0; k < n; ++k) {
          if ((mask >> k) & 1u) region.push_back(k);
        }
        const double exact = dense_entropy(dense, region);
        const int stab = tableau.entropy(region);
        const double err = std::abs(exact - stab);
        ++report.entropy_checks;
        report.max_entropy_error = std::max(report.max_entropy_error, err);
        if (err > tolerance) {
          ++report.mismatches;
          report.failures.push_back("circuit " + std::to_string(c) + " layer " + std::to_string(t) +
                                    ": entropy " + std::to_string(stab) + " vs " + std::to_string(exact));
        }
      }
    }
    if (!tableau.invariants_hold()) {
      ++report.mismatches;
      report.failures.push_back("circuit " + std::to_string(c) + ": tableau invariants violated");
    }
  }
  return report;
}

}  // namespace lrmoc
