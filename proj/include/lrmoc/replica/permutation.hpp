#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lrmoc {

/// Element of S_n acting on {0, ..., n-1}. Composition is (f * g)(x) = f(g(x)).
class Permutation {
 public:
  Permutation() = default;
  /// images[k] = image of k; must be a bijection.
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(std::size_t n);
  /// The n-cycle k -> k+1 mod n.
  static Permutation cycle(std::size_t n);
  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);
  /// All n! elements in lexicographic order of their image tuples.
  static std::vector<Permutation> all(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t k) const { return images_[k]; }
  std::span<const std::uint8_t> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  std::size_t cycle_count() const;
  bool is_identity() const;
  /// Position in all(n).
  std::size_t lex_rank() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

/// Orbits of <generators> on {0..n-1}, by union of BFS closures.
std::size_t orbit_count(std::span<const Permutation> generators);

/// Reference: enumerates the generated subgroup, then counts orbits.
std::vector<Permutation> generated_subgroup(std::span<const Permutation> generators);
std::size_t orbit_count_by_enumeration(std::span<const Permutation> generators);

std::size_t factorial(std::size_t n);

}  // namespace lrmoc
