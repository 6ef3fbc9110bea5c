#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lrmoc/core/pauli.hpp"
#include "lrmoc/core/rng.hpp"

namespace lrmoc {

/// P(r) = r^-alpha / Z_N on r = 1..floor(N/2). alpha = +inf puts all mass on r = 1.
class RangeDistribution {
 public:
  RangeDistribution(std::size_t n_qubits, double alpha);

  std::size_t n_qubits() const { return n_; }
  double alpha() const { return alpha_; }
  std::size_t max_distance() const { return pmf_.size(); }

  double probability(std::size_t r) const;
  /// Exact mean separation under the truncated law.
  double mean() const;
  /// Inverse-CDF draw.
  std::size_t sample(RandomStream& rng) const;

 private:
  std::size_t n_;
  double alpha_;
  std::vector<double> pmf_;
  std::vector<double> cdf_;
};

/// Minimal-arc distance on a ring of n sites.
inline std::size_t ring_distance(std::size_t n, std::size_t i, std::size_t j) {
  const std::size_t d = i > j ? i - j : j - i;
  return std::min(d, n - d);
}

enum class BasisModeKind : std::uint8_t { Random, Single, Xxz };

struct BasisMode {
  BasisModeKind kind = BasisModeKind::Random;
  /// ZZ weight for the XXZ mode.
  double p = 1.0 / 3.0;

  static BasisMode random() { return {BasisModeKind::Random, 1.0 / 3.0}; }
  static BasisMode single() { return {BasisModeKind::Single, 1.0 / 3.0}; }
  static BasisMode xxz(double p);

  friend bool operator==(const BasisMode&, const BasisMode&) = default;
};

std::string to_string(BasisModeKind kind);

struct CircuitLayer {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Basis> bases;

  std::size_t size() const { return pairs.size(); }
  friend bool operator==(const CircuitLayer&, const CircuitLayer&) = default;
};

class PackingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// M2 = round(density * N); density 0 is the sparse limit M2 = 1.
std::size_t measurements_per_layer(std::size_t n_qubits, double density);

/// Draws circuit layers for a fixed (N, alpha, M2, basis mode).
class CircuitSampler {
 public:
  static constexpr std::size_t kMaxResamples = 10000;

  CircuitSampler(std::size_t n_qubits, double alpha, std::size_t m2, BasisMode mode);

  std::size_t n_qubits() const { return dist_.n_qubits(); }
  std::size_t m2() const { return m2_; }
  const RangeDistribution& distances() const { return dist_; }
  const BasisMode& mode() const { return mode_; }

  /// Places M2 disjoint pairs by rejection: unused i uniform, r ~ P(r),
  /// direction uniform, full redraw when the partner is taken. After
  /// kMaxResamples consecutive failures the pair is drawn directly from the
  /// same law restricted to free pairs; PackingError if none has weight.
  CircuitLayer sample_layer(RandomStream& rng) const;

  Basis sample_basis(RandomStream& rng) const;

 private:
  std::pair<std::size_t, std::size_t> place_directly(const std::vector<std::size_t>& free_sites,
                                                     const std::vector<char>& used, RandomStream& rng) const;

  RangeDistribution dist_;
  std::size_t m2_;
  BasisMode mode_;
};

/// M2 * E[r] / N with the exact truncated mean.
double expected_crossings(std::size_t n_qubits, double alpha, std::size_t m2);

/// True if the minimal arc between i and j covers the bond (cut-1, cut).
/// Antipodal pairs use the arc running upward (mod N) from i.
bool crosses_cut(std::size_t n_qubits, std::size_t i, std::size_t j, std::size_t cut);

/// Total number of sampled pairs straddling the cut over n_layers layers.
std::uint64_t count_crossings_mc(const CircuitSampler& sampler, std::size_t cut, std::size_t n_layers,
                                 RandomStream& rng);

}  // namespace lrmoc
