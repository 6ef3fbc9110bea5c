#include "lrmoc/replica/haar_replica.hpp"

#include <cmath>
#include <stdexcept>

#include "lrmoc/oracle/dense_state.hpp"

namespace lrmoc {

namespace {

struct BranchSums {
  double numerator = 0.0;
  double denominator = 0.0;
};

struct Walk {
  const std::vector<CircuitLayer>& layers;
  const std::vector<std::vector<Eigen::Matrix2cd>>& haar;
  const std::vector<std::size_t>& region;
  std::size_t n;
  BranchSums acc;

  void leaf(const DenseState& state) {
    const double weight = state.amplitudes().squaredNorm();
    if (weight < 1e-300) return;
    const double wn = std::pow(weight, static_cast<double>(n));
    acc.denominator += wn;
    if (region.empty()) {
      acc.numerator += wn;
      return;
    }
    const Eigen::MatrixXcd rho = state.reduced_density_matrix(region);
    Eigen::MatrixXcd power = rho;
    for (std::size_t k = 1; k < n; ++k) power = power * rho;
    acc.numerator += wn * power.trace().real();
  }

  void layer(const DenseState& state, std::size_t t) {
    if (t == layers.size()) {
      leaf(state);
      return;
    }
    DenseState dressed = state;
    for (std::size_t x = 0; x < state.n_qubits(); ++x) dressed.apply_single(x, haar[t][x]);
    checks(dressed, t, 0);
  }

  void checks(const DenseState& state, std::size_t t, std::size_t k) {
    if (k == layers[t].pairs.size()) {
      layer(state, t + 1);
      return;
    }
    const auto [i, j] = layers[t].pairs[k];
    const auto zz = PauliString::two_site(state.n_qubits(), Basis::ZZ, i, j);
    for (int outcome : {1, -1}) {
      DenseState branch = state;
      branch.project_unnormalized(zz, outcome);
      checks(branch, t, k + 1);
    }
  }
};

}  // namespace

ReplicaEstimate haar_mc_replica(std::size_t n_qubits, const std::vector<CircuitLayer>& layers,
                                const SubsystemMask& region, std::size_t n, std::size_t samples,
                                RandomStream& rng) {
  if (n_qubits == 0 || n_qubits > 4) throw std::invalid_argument("replica Monte Carlo supports 1..4 qubits");
  if (layers.size() > 3) throw std::invalid_argument("replica Monte Carlo supports at most 3 layers");
  if (n < 2) throw std::invalid_argument("replica count must be at least 2");
  if (samples < 2) throw std::invalid_argument("need at least two samples");
  if (region.n_qubits() != n_qubits) throw std::invalid_argument("region size does not match circuit");

  const auto sites = region.sites();
  const DenseState initial = DenseState::plus_state(n_qubits);
  std::vector<double> num(samples);
  std::vector<double> den(samples);
  std::vector<std::vector<Eigen::Matrix2cd>> haar(layers.size(), std::vector<Eigen::Matrix2cd>(n_qubits));
  for (std::size_t s = 0; s < samples; ++s) {
    for (auto& layer : haar) {
      for (auto& u : layer) u = haar_single_qubit(rng);
    }
    Walk walk{layers, haar, sites, n, {}};
    walk.layer(initial, 0);
    num[s] = walk.acc.numerator;
    den[s] = walk.acc.denominator;
  }

  double sum_num = 0.0;
  double sum_den = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    sum_num += num[s];
    sum_den += den[s];
  }
  ReplicaEstimate out;
  out.samples = samples;
  out.value = sum_num / sum_den;
  // Delete-one jackknife for the ratio of means.
  const double m = static_cast<double>(samples);
  double mean_loo = 0.0;
  std::vector<double> loo(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    loo[s] = (sum_num - num[s]) / (sum_den - den[s]);
    mean_loo += loo[s];
  }
  mean_loo /= m;
  double var = 0.0;
  for (double v : loo) var += (v - mean_loo) * (v - mean_loo);
  out.std_error = std::sqrt((m - 1.0) / m * var);
  return out;
}

}  // namespace lrmoc
