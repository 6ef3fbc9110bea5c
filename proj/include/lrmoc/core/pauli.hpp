#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lrmoc/core/bitmatrix.hpp"

namespace lrmoc {

/// Two-qubit parity check basis.
enum class Basis : std::uint8_t { XX, YY, ZZ };

std::string_view to_string(Basis b);

/// Hermitian-or-not Pauli string: i^phase * prod_k P_k, with (x,z) = (1,1)
/// meaning Y.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n_qubits);

  /// Parses strings like "XIZY" or "-XX". Index 0 is the leftmost character.
  static PauliString parse(std::string_view text);
  static PauliString two_site(std::size_t n_qubits, Basis basis, std::size_t i, std::size_t j);
  static PauliString single(std::size_t n_qubits, char op, std::size_t site);

  std::size_t n_qubits() const { return n_; }
  /// Exponent k of the global factor i^k, in [0, 4).
  std::uint8_t phase() const { return phase_; }
  void set_phase(std::uint8_t k) { phase_ = k & 3u; }

  bool x(std::size_t k) const { return get_bit(x_, k); }
  bool z(std::size_t k) const { return get_bit(z_, k); }
  void set(std::size_t k, bool x_bit, bool z_bit);
  char op(std::size_t k) const;

  std::span<const Word> x_words() const { return x_; }
  std::span<const Word> z_words() const { return z_; }

  bool is_identity() const;
  std::size_t weight() const;
  /// Sites with a non-identity factor, ascending.
  std::vector<std::size_t> support() const;

  bool commutes_with(const PauliString& other) const;

  /// this <- this * rhs, phases included.
  PauliString& operator*=(const PauliString& rhs);

  std::string to_string() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Word> x_;
  std::vector<Word> z_;
  std::uint8_t phase_ = 0;
};

/// Exponent of i picked up when forming (x1,z1)*(x2,z2) over one word of
/// sites, before any sign bits. Returns (#plus - #minus) mod 4.
inline std::uint8_t pauli_product_phase(Word x1, Word z1, Word x2, Word z2) {
  // Per-site contributions: XY, YZ, ZX give +i; YX, ZY, XZ give -i.
  const Word y1 = x1 & z1;
  const Word xo1 = x1 & ~z1;
  const Word zo1 = ~x1 & z1;
  const Word y2 = x2 & z2;
  const Word xo2 = x2 & ~z2;
  const Word zo2 = ~x2 & z2;
  const Word plus = (xo1 & y2) | (y1 & zo2) | (zo1 & xo2);
  const Word minus = (y1 & xo2) | (zo1 & y2) | (xo1 & zo2);
  const int diff = __builtin_popcountll(plus) - __builtin_popcountll(minus);
  return static_cast<std::uint8_t>(diff & 3);
}

}  // namespace lrmoc
