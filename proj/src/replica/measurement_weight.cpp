#include "lrmoc/replica/measurement_weight.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace lrmoc {

namespace {

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) r *= base;
  return r;
}

void check_args(const Permutation& s1, const Permutation& s2, const Permutation& t1, const Permutation& t2,
                std::uint64_t d) {
  const std::size_t n = s1.size();
  if (s2.size() != n || t1.size() != n || t2.size() != n) {
    throw std::invalid_argument("measurement weight needs permutations of equal degree");
  }
  if (d < 2) throw std::invalid_argument("local dimension must be at least 2");
}

}  // namespace

std::uint64_t wm_weight(const Permutation& s1, const Permutation& s2, const Permutation& t1,
                        const Permutation& t2, std::uint64_t d) {
  check_args(s1, s2, t1, t2, d);
  const std::array<Permutation, 3> gens{t1 * s1, t2 * s1, t2 * s2};
  return ipow(d, 1 + orbit_count(gens));
}

std::uint64_t wm_weight_alt(const Permutation& s1, const Permutation& s2, const Permutation& t1,
                            const Permutation& t2, std::uint64_t d) {
  check_args(s1, s2, t1, t2, d);
  const std::array<Permutation, 3> gens{t1 * t2.inverse(), t2 * s1, s1.inverse() * s2};
  return ipow(d, 1 + orbit_count(gens));
}

std::uint64_t wm_bruteforce(const Permutation& s1, const Permutation& s2, const Permutation& t1,
                            const Permutation& t2, std::uint64_t d) {
  check_args(s1, s2, t1, t2, d);
  const std::size_t n = s1.size();
  if (n > 3 || d > 3) throw std::invalid_argument("brute-force weight is capped at n, d <= 3");

  // Basis state x = (a_1..a_n, b_1..b_n): replica m of site 1 holds a_m, of
  // site 2 holds b_m. chi_g maps |i_1..i_n> to |i_g(1)..i_g(n)>.
  const std::size_t dim = ipow(d, 2 * n);
  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> v(2 * n);
    for (std::size_t k = 0; k < 2 * n; ++k) {
      v[k] = x % d;
      x /= d;
    }
    return v;
  };
  auto encode = [&](const std::vector<std::size_t>& v) {
    std::size_t x = 0;
    for (std::size_t k = 2 * n; k-- > 0;) x = x * d + v[k];
    return x;
  };
  auto act = [&](const Permutation& g1, const Permutation& g2, std::size_t x) {
    const auto v = digits(x);
    std::vector<std::size_t> w(2 * n);
    for (std::size_t m = 0; m < n; ++m) {
      w[m] = v[g1(m)];
      w[n + m] = v[n + g2(m)];
    }
    return encode(w);
  };
  auto kraus = [&](std::size_t i, std::size_t x) {
    const auto v = digits(x);
    for (std::size_t m = 0; m < n; ++m) {
      if ((v[m] + i) % d != v[n + m]) return false;
    }
    return true;
  };

  std::uint64_t total = 0;
  for (std::size_t i = 0; i < d; ++i) {
    // Tr(K A K B) = sum_x K(x) K(B x) [A B x == x] for permutation matrices A, B.
    for (std::size_t x = 0; x < dim; ++x) {
      if (!kraus(i, x)) continue;
      const std::size_t bx = act(t1, t2, x);
      if (!kraus(i, bx)) continue;
      if (act(s1, s2, bx) == x) ++total;
    }
  }
  return total;
}

}  // namespace lrmoc
