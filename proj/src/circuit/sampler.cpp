#include "lrmoc/circuit/sampler.hpp"

#include <algorithm>
#include <cmath>

namespace lrmoc {

RangeDistribution::RangeDistribution(std::size_t n_qubits, double alpha) : n_(n_qubits), alpha_(alpha) {
  if (n_qubits < 2) throw std::invalid_argument("range distribution needs at least two qubits");
  if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be non-negative");
  const std::size_t rmax = n_qubits / 2;
  pmf_.resize(rmax);
  double z = 0.0;
  for (std::size_t r = 1; r <= rmax; ++r) {
    const double w = std::isinf(alpha) ? (r == 1 ? 1.0 : 0.0) : std::pow(static_cast<double>(r), -alpha);
    pmf_[r - 1] = w;
    z += w;
  }
  cdf_.resize(rmax);
  double acc = 0.0;
  for (std::size_t k = 0; k < rmax; ++k) {
    pmf_[k] /= z;
    acc += pmf_[k];
    cdf_[k] = acc;
  }
  cdf_.back() = 1.0;
}

double RangeDistribution::probability(std::size_t r) const {
  if (r == 0 || r > pmf_.size()) return 0.0;
  return pmf_[r - 1];
}

double RangeDistribution::mean() const {
  double m = 0.0;
  for (std::size_t k = 0; k < pmf_.size(); ++k) m += static_cast<double>(k + 1) * pmf_[k];
  return m;
}

std::size_t RangeDistribution::sample(RandomStream& rng) const {
  const double u = uniform01(rng);
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const auto k = static_cast<std::size_t>(it - cdf_.begin());
  return std::min(k, cdf_.size() - 1) + 1;
}

BasisMode BasisMode::xxz(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("XXZ weight p must lie in [0, 1]");
  return {BasisModeKind::Xxz, p};
}

std::string to_string(BasisModeKind kind) {
  switch (kind) {
    case BasisModeKind::Random: return "random";
    case BasisModeKind::Single: return "single";
    case BasisModeKind::Xxz: return "xxz";
  }
  return "?";
}

std::size_t measurements_per_layer(std::size_t n_qubits, double density) {
  if (!(density >= 0.0 && density <= 0.5)) throw std::invalid_argument("density must lie in [0, 0.5]");
  if (density == 0.0) return 1;
  const auto m2 = static_cast<std::size_t>(std::llround(density * static_cast<double>(n_qubits)));
  return std::clamp<std::size_t>(m2, 1, n_qubits / 2);
}

CircuitSampler::CircuitSampler(std::size_t n_qubits, double alpha, std::size_t m2, BasisMode mode)
    : dist_(n_qubits, alpha), m2_(m2), mode_(mode) {
  if (m2 == 0 || m2 > n_qubits / 2) throw std::invalid_argument("M2 must lie in [1, N/2]");
  if (!(mode.p >= 0.0 && mode.p <= 1.0)) throw std::invalid_argument("XXZ weight p must lie in [0, 1]");
}

Basis CircuitSampler::sample_basis(RandomStream& rng) const {
  if (mode_.kind == BasisModeKind::Xxz) {
    const double u = uniform01(rng);
    if (u < mode_.p) return Basis::ZZ;
    return random_bit(rng) ? Basis::YY : Basis::XX;
  }
  return static_cast<Basis>(uniform_index(rng, 3));
}

std::pair<std::size_t, std::size_t> CircuitSampler::place_directly(const std::vector<std::size_t>& free_sites,
                                                                   const std::vector<char>& used,
                                                                   RandomStream& rng) const {
  // Weight of ordered (i, j): P(r) times the chance that a direction draw hits j.
  const std::size_t n = n_qubits();
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  std::vector<double> cumulative;
  double total = 0.0;
  for (auto i : free_sites) {
    for (std::size_t r = 1; r <= dist_.max_distance(); ++r) {
      const double p = dist_.probability(r);
      if (p == 0.0) continue;
      const bool antipodal = 2 * r == n;
      for (int dir = 0; dir < (antipodal ? 1 : 2); ++dir) {
        const std::size_t j = dir == 0 ? (i + r) % n : (i + n - r) % n;
        if (used[j]) continue;
        total += antipodal ? p : 0.5 * p;
        candidates.emplace_back(i, j);
        cumulative.push_back(total);
      }
    }
  }
  if (candidates.empty() || total <= 0.0) {
    throw PackingError("no admissible pair left for N=" + std::to_string(n) + ", alpha=" +
                       std::to_string(dist_.alpha()) + ", M2=" + std::to_string(m2_));
  }
  const double u = uniform01(rng) * total;
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  const auto k = std::min(static_cast<std::size_t>(it - cumulative.begin()), candidates.size() - 1);
  return candidates[k];
}

CircuitLayer CircuitSampler::sample_layer(RandomStream& rng) const {
  const std::size_t n = n_qubits();
  CircuitLayer layer;
  layer.pairs.reserve(m2_);
  layer.bases.reserve(m2_);
  std::vector<char> used(n, 0);
  std::vector<std::size_t> free_sites(n);
  for (std::size_t k = 0; k < n; ++k) free_sites[k] = k;

  auto take = [&](std::size_t site) {
    used[site] = 1;
    const auto it = std::find(free_sites.begin(), free_sites.end(), site);
    *it = free_sites.back();
    free_sites.pop_back();
  };

  for (std::size_t m = 0; m < m2_; ++m) {
    bool placed = false;
    for (std::size_t attempt = 0; attempt < kMaxResamples; ++attempt) {
      const std::size_t i = free_sites[uniform_index(rng, free_sites.size())];
      const std::size_t r = dist_.sample(rng);
      const bool right = random_bit(rng);
      const std::size_t j = right ? (i + r) % n : (i + n - r) % n;
      if (used[j]) continue;
      layer.pairs.emplace_back(i, j);
      take(i);
      take(j);
      placed = true;
      break;
    }
    if (!placed) {
      std::vector<std::size_t> sorted_free = free_sites;
      std::sort(sorted_free.begin(), sorted_free.end());
      const auto [i, j] = place_directly(sorted_free, used, rng);
      layer.pairs.emplace_back(i, j);
      take(i);
      take(j);
    }
  }

  if (mode_.kind == BasisModeKind::Single) {
    layer.bases.assign(m2_, sample_basis(rng));
  } else {
    for (std::size_t m = 0; m < m2_; ++m) layer.bases.push_back(sample_basis(rng));
  }
  return layer;
}

double expected_crossings(std::size_t n_qubits, double alpha, std::size_t m2) {
  const RangeDistribution dist(n_qubits, alpha);
  return static_cast<double>(m2) * dist.mean() / static_cast<double>(n_qubits);
}

bool crosses_cut(std::size_t n_qubits, std::size_t i, std::size_t j, std::size_t cut) {
  const std::size_t lo = std::min(i, j);
  const std::size_t hi = std::max(i, j);
  const std::size_t direct = hi - lo;
  const std::size_t b = cut % n_qubits;
  // Bond b sits between sites b-1 and b; bond 0 wraps between N-1 and 0.
  const bool on_direct_arc = b > lo && b <= hi;
  if (2 * direct < n_qubits) return on_direct_arc;
  if (2 * direct > n_qubits) return !on_direct_arc;
  // Antipodal tie: the arc runs upward from the first site of the pair.
  return i == lo ? on_direct_arc : !on_direct_arc;
}

std::uint64_t count_crossings_mc(const CircuitSampler& sampler, std::size_t cut, std::size_t n_layers,
                                 RandomStream& rng) {
  std::uint64_t total = 0;
  for (std::size_t t = 0; t < n_layers; ++t) {
    const auto layer = sampler.sample_layer(rng);
    for (const auto& [i, j] : layer.pairs) {
      if (crosses_cut(sampler.n_qubits(), i, j, cut)) ++total;
    }
  }
  return total;
}

}  // namespace lrmoc
