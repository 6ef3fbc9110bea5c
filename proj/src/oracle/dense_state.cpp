#include "lrmoc/oracle/dense_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace lrmoc {

namespace {

void check_size(std::size_t n) {
  if (n == 0 || n > kDenseMaxQubits) throw std::invalid_argument("dense state supports 1..12 qubits");
}

std::complex<double> i_power(unsigned k) {
  switch (k & 3u) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace

DenseState DenseState::plus_state(std::size_t n_qubits) {
  check_size(n_qubits);
  const auto dim = Eigen::Index{1} << n_qubits;
  return DenseState(n_qubits, Eigen::VectorXcd::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim))));
}

DenseState DenseState::zero_state(std::size_t n_qubits) {
  check_size(n_qubits);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
  psi(0) = 1.0;
  return DenseState(n_qubits, std::move(psi));
}

DenseState DenseState::ancilla_seeded(std::size_t n_system, std::size_t seed_site) {
  if (seed_site >= n_system) throw std::out_of_range("ancilla seed site out of range");
  const std::size_t n = n_system + 1;
  check_size(n);
  const std::size_t anc = n_system;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  // (|00> + |11>)/sqrt2 on (seed, anc), |+> elsewhere.
  const double amp = 1.0 / std::sqrt(static_cast<double>(std::size_t{1} << (n - 1)));
  for (std::size_t b = 0; b < (std::size_t{1} << n); ++b) {
    if (((b >> seed_site) & 1u) == ((b >> anc) & 1u)) psi(static_cast<Eigen::Index>(b)) = amp;
  }
  return DenseState(n, std::move(psi));
}

DenseState DenseState::from_amplitudes(std::size_t n_qubits, Eigen::VectorXcd amplitudes) {
  check_size(n_qubits);
  if (amplitudes.size() != (Eigen::Index{1} << n_qubits)) throw std::invalid_argument("amplitude vector has wrong length");
  return DenseState(n_qubits, std::move(amplitudes));
}

Eigen::VectorXcd DenseState::apply_pauli(const PauliString& p) const {
  if (p.n_qubits() != n_) throw std::invalid_argument("operator size does not match state");
  const std::uint64_t xm = p.x_words()[0];
  const std::uint64_t zm = p.z_words()[0];
  // Y = i X Z in the (x, z) encoding.
  const auto global = i_power(p.phase() + static_cast<unsigned>(__builtin_popcountll(xm & zm)));
  Eigen::VectorXcd out(psi_.size());
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(psi_.size()); ++b) {
    const double s = (__builtin_popcountll(b & zm) & 1) ? -1.0 : 1.0;
    out(static_cast<Eigen::Index>(b ^ xm)) = global * s * psi_(static_cast<Eigen::Index>(b));
  }
  return out;
}

double DenseState::probability_plus(const PauliString& p) const {
  const auto pp = apply_pauli(p);
  const double expectation = psi_.dot(pp).real() / psi_.squaredNorm();
  return std::clamp(0.5 * (1.0 + expectation), 0.0, 1.0);
}

void DenseState::project_unnormalized(const PauliString& p, int outcome) {
  if (outcome != 1 && outcome != -1) throw std::invalid_argument("outcome must be +1 or -1");
  psi_ = 0.5 * (psi_ + static_cast<double>(outcome) * apply_pauli(p));
}

void DenseState::project(const PauliString& p, int outcome) {
  project_unnormalized(p, outcome);
  const double nrm = psi_.norm();
  if (nrm < 1e-12) throw std::runtime_error("projected onto a zero-weight measurement branch");
  psi_ /= nrm;
}

int DenseState::measure(const PauliString& p, RandomStream& rng) {
  if (p.is_identity()) throw std::invalid_argument("cannot measure the identity operator");
  const double prob = probability_plus(p);
  const int outcome = uniform01(rng) < prob ? 1 : -1;
  project(p, outcome);
  return outcome;
}

int DenseState::measure_parity(Basis basis, std::size_t i, std::size_t j, RandomStream& rng) {
  return measure(PauliString::two_site(n_, basis, i, j), rng);
}

void DenseState::apply_single(std::size_t site, const Eigen::Matrix2cd& u) {
  if (site >= n_) throw std::out_of_range("site out of range");
  const std::size_t bit = std::size_t{1} << site;
  for (std::size_t b = 0; b < static_cast<std::size_t>(psi_.size()); ++b) {
    if (b & bit) continue;
    const auto i0 = static_cast<Eigen::Index>(b);
    const auto i1 = static_cast<Eigen::Index>(b | bit);
    const std::complex<double> a0 = psi_(i0);
    const std::complex<double> a1 = psi_(i1);
    psi_(i0) = u(0, 0) * a0 + u(0, 1) * a1;
    psi_(i1) = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

Eigen::MatrixXcd DenseState::reduced_density_matrix(std::span<const std::size_t> region) const {
  std::vector<bool> in_region(n_, false);
  for (auto s : region) {
    if (s >= n_) throw std::out_of_range("region site out of range");
    in_region[s] = true;
  }
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < n_; ++k) {
    if (!in_region[k]) rest.push_back(k);
  }
  const auto da = Eigen::Index{1} << region.size();
  const auto dr = Eigen::Index{1} << rest.size();
  Eigen::MatrixXcd m(da, dr);
  for (Eigen::Index a = 0; a < da; ++a) {
    for (Eigen::Index c = 0; c < dr; ++c) {
      std::size_t b = 0;
      for (std::size_t k = 0; k < region.size(); ++k) {
        if ((a >> k) & 1) b |= std::size_t{1} << region[k];
      }
      for (std::size_t k = 0; k < rest.size(); ++k) {
        if ((c >> k) & 1) b |= std::size_t{1} << rest[k];
      }
      m(a, c) = psi_(static_cast<Eigen::Index>(b));
    }
  }
  return m * m.adjoint() / psi_.squaredNorm();
}

double dense_entropy(const DenseState& state, std::span<const std::size_t> region) {
  if (region.empty()) throw std::invalid_argument("entropy of an empty region");
  // Work on the smaller side of the cut.
  std::vector<std::size_t> sites(region.begin(), region.end());
  if (2 * sites.size() > state.n_qubits()) {
    std::vector<bool> in_region(state.n_qubits(), false);
    for (auto s : sites) in_region[s] = true;
    sites.clear();
    for (std::size_t k = 0; k < state.n_qubits(); ++k) {
      if (!in_region[k]) sites.push_back(k);
    }
    if (sites.empty()) return 0.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(state.reduced_density_matrix(sites),
                                                         Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double lambda = solver.eigenvalues()(k);
    if (lambda > 1e-12) s -= lambda * std::log2(lambda);
  }
  return s;
}

Eigen::Matrix2cd haar_single_qubit(RandomStream& rng) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  Eigen::Matrix2cd g;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(r, c) = {re, im};
    }
  }
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
  Eigen::Matrix2cd q = qr.householderQ();
  const Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < 2; ++k) {
    const auto d = r(k, k);
    q.col(k) *= d / std::abs(d);
  }
  return q;
}

}  // namespace lrmoc
