#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lrmoc/core/bitmatrix.hpp"
#include "lrmoc/core/pauli.hpp"
#include "lrmoc/core/rng.hpp"
#include "lrmoc/core/subsystem.hpp"

namespace lrmoc {

struct MeasurementResult {
  int outcome = 1;  // +1 or -1
  bool deterministic = false;
};

/// Pure N-qubit stabilizer state with destabilizers (Aaronson-Gottesman).
///
/// Storage is row-major: 2N rows (destabilizers 0..N-1, stabilizers
/// N..2N-1), each row holding the X block followed by the Z block. Signs
/// live in a separate packed bit-vector. A measurement costs O(N^2 / 64)
/// word operations in the worst case.
class StabilizerTableau {
 public:
  /// |+>^n: stabilizers X_k, destabilizers Z_k.
  static StabilizerTableau plus_state(std::size_t n_qubits);

  /// (n_system + 1)-qubit state: qubit n_system (the ancilla) shares a Bell
  /// pair with seed_site, every other qubit is |+>.
  static StabilizerTableau ancilla_seeded(std::size_t n_system, std::size_t seed_site);

  std::size_t n_qubits() const { return n_; }

  /// Projective measurement of a Hermitian Pauli string with phase +1.
  /// Random outcomes are fair coin flips drawn from rng; the state is
  /// updated in place. Deterministic outcomes leave the tableau untouched.
  MeasurementResult measure(const PauliString& op, RandomStream& rng);

  /// Same as measure(two_site(basis, i, j)) without building the string.
  MeasurementResult measure_parity(Basis basis, std::size_t i, std::size_t j, RandomStream& rng);

  PauliString stabilizer(std::size_t k) const { return row_as_pauli(n_ + k); }
  PauliString destabilizer(std::size_t k) const { return row_as_pauli(k); }

  /// Stabilizer generators restricted to the X and Z columns of the sites
  /// in region (N rows, 2|region| columns).
  BitMatrix restricted_check_matrix(std::span<const std::size_t> region) const;

  /// Entanglement entropy of region in bits: rank(restricted) - |region|.
  int entropy(std::span<const std::size_t> region) const;

  /// Full symplectic and rank consistency check (O(N^3); for tests).
  bool invariants_hold() const;

  friend bool operator==(const StabilizerTableau&, const StabilizerTableau&) = default;

 private:
  explicit StabilizerTableau(std::size_t n_qubits);

  std::span<Word> xs(std::size_t r) { return {bits_.data() + r * stride_, words_}; }
  std::span<Word> zs(std::size_t r) { return {bits_.data() + r * stride_ + words_, words_}; }
  std::span<const Word> xs(std::size_t r) const { return {bits_.data() + r * stride_, words_}; }
  std::span<const Word> zs(std::size_t r) const { return {bits_.data() + r * stride_ + words_, words_}; }
  bool sign(std::size_t r) const { return get_bit(signs_, r); }
  void set_sign(std::size_t r, bool s) { set_bit(signs_, r, s); }

  /// row h <- row h * row src (rows must commute).
  void multiply_row(std::size_t h, std::size_t src);
  PauliString row_as_pauli(std::size_t r) const;
  void set_row(std::size_t r, const PauliString& p, bool negative);

  template <typename Anticommutes>
  MeasurementResult measure_impl(const PauliString* op, Anticommutes&& anticommutes,
                                 RandomStream& rng, Basis basis, std::size_t i, std::size_t j);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> bits_;
  std::vector<Word> signs_;
};

}  // namespace lrmoc
