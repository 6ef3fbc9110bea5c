#include "lrmoc/replica/weingarten.hpp"

#include <string>
#include <utility>

namespace lrmoc {

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (rhs.size != size) throw std::invalid_argument("matrix size mismatch");
  RationalMatrix out(size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t k = 0; k < size; ++k) {
      if ((*this)(r, k) == 0) continue;
      for (std::size_t c = 0; c < size; ++c) out(r, c) += (*this)(r, k) * rhs(k, c);
    }
  }
  return out;
}

bool RationalMatrix::is_identity() const {
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

RationalMatrix invert(const RationalMatrix& m) {
  const std::size_t n = m.size;
  RationalMatrix a = m;
  RationalMatrix inv(n);
  for (std::size_t k = 0; k < n; ++k) inv(k, k) = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) throw SingularGramError("matrix is singular (rank deficient at column " + std::to_string(col) + ")");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rational p = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

RationalMatrix gram_matrix(std::size_t n, std::size_t d) {
  if (n == 0) throw std::invalid_argument("replica count must be positive");
  if (d < 2) throw std::invalid_argument("local dimension must be at least 2");
  const auto perms = Permutation::all(n);
  RationalMatrix g(perms.size());
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      BigInt v = 1;
      const std::size_t cycles = (perms[a].inverse() * perms[b]).cycle_count();
      for (std::size_t k = 0; k < cycles; ++k) v *= d;
      g(a, b) = Rational(v);
    }
  }
  return g;
}

WeingartenTable::WeingartenTable(std::size_t n, std::size_t d) : n_(n), d_(d), gram_(gram_matrix(n, d)) {
  try {
    inverse_ = invert(gram_);
  } catch (const SingularGramError&) {
    throw SingularGramError("Gram matrix of S_" + std::to_string(n) + " at d=" + std::to_string(d) +
                            " is singular; the Weingarten function is undefined for d < n");
  }
  // Row of the identity, which is element 0 of Permutation::all.
  values_.assign(inverse_.data.begin(), inverse_.data.begin() + static_cast<std::ptrdiff_t>(inverse_.size));
}

}  // namespace lrmoc
