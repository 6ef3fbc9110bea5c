#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include <Eigen/Dense>

#include "lrmoc/core/pauli.hpp"
#include "lrmoc/core/rng.hpp"

namespace lrmoc {

inline constexpr std::size_t kDenseMaxQubits = 12;

/// State vector on n <= 12 qubits. Qubit k is bit k of the amplitude index.
class DenseState {
 public:
  static DenseState plus_state(std::size_t n_qubits);
  static DenseState zero_state(std::size_t n_qubits);
  /// Same layout as StabilizerTableau::ancilla_seeded: ancilla at index n_system.
  static DenseState ancilla_seeded(std::size_t n_system, std::size_t seed_site);
  static DenseState from_amplitudes(std::size_t n_qubits, Eigen::VectorXcd amplitudes);

  std::size_t n_qubits() const { return n_; }
  const Eigen::VectorXcd& amplitudes() const { return psi_; }
  double norm() const { return psi_.norm(); }

  /// P|psi> for a Pauli string including its phase.
  Eigen::VectorXcd apply_pauli(const PauliString& p) const;

  /// Born probability of outcome +1 for a Hermitian Pauli measurement.
  double probability_plus(const PauliString& p) const;

  /// Projects with (I + outcome P)/2 and renormalizes. Throws if the branch
  /// has (numerically) zero weight.
  void project(const PauliString& p, int outcome);

  /// Born-rule measurement; returns the outcome.
  int measure(const PauliString& p, RandomStream& rng);
  int measure_parity(Basis basis, std::size_t i, std::size_t j, RandomStream& rng);

  /// Unnormalized projection used for branch sums.
  void project_unnormalized(const PauliString& p, int outcome);

  void apply_single(std::size_t site, const Eigen::Matrix2cd& u);

  /// Reduced density matrix on region (basis index bit a = region[a]).
  Eigen::MatrixXcd reduced_density_matrix(std::span<const std::size_t> region) const;

 private:
  DenseState(std::size_t n_qubits, Eigen::VectorXcd psi) : n_(n_qubits), psi_(std::move(psi)) {}

  std::size_t n_ = 0;
  Eigen::VectorXcd psi_;
};

/// Von Neumann entropy in bits; eigenvalues below 1e-12 are dropped.
double dense_entropy(const DenseState& state, std::span<const std::size_t> region);

/// Haar-random 2x2 unitary (QR of a complex Ginibre matrix with phase fix).
Eigen::Matrix2cd haar_single_qubit(RandomStream& rng);

}  // namespace lrmoc
