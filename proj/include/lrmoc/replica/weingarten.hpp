#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lrmoc/replica/permutation.hpp"

namespace lrmoc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class SingularGramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Square matrix of exact rationals, row-major.
struct RationalMatrix {
  std::size_t size = 0;
  std::vector<Rational> data;

  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : size(n), data(n * n) {}
  Rational& operator()(std::size_t r, std::size_t c) { return data[r * size + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data[r * size + c]; }

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  bool is_identity() const;
};

/// Exact inverse by Gauss-Jordan elimination; throws SingularGramError.
RationalMatrix invert(const RationalMatrix& m);

/// G_{sigma tau} = d^cyc(sigma^-1 tau) over S_n in Permutation::all order.
RationalMatrix gram_matrix(std::size_t n, std::size_t d);

/// Weingarten function Wg_d on S_n as the exact inverse of the Gram matrix.
class WeingartenTable {
 public:
  /// Throws SingularGramError when G is not invertible (d < n).
  WeingartenTable(std::size_t n, std::size_t d);

  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }
  /// Wg(pi); class function of pi.
  const Rational& operator()(const Permutation& pi) const { return values_[pi.lex_rank()]; }
  const std::vector<Rational>& values() const { return values_; }
  const RationalMatrix& gram() const { return gram_; }
  /// Full matrix Wg(sigma^-1 tau).
  const RationalMatrix& matrix() const { return inverse_; }

 private:
  std::size_t n_;
  std::size_t d_;
  RationalMatrix gram_;
  RationalMatrix inverse_;
  std::vector<Rational> values_;
};

}  // namespace lrmoc
