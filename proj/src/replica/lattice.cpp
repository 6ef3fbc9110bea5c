#include "lrmoc/replica/lattice.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#ifdef LRMOC_HAVE_OPENMP
#include <omp.h>
#endif

#include "lrmoc/replica/measurement_weight.hpp"

namespace lrmoc {

std::size_t max_free_sites(std::size_t n) {
  switch (n) {
    case 1: return 24;
    case 2: return 16;
    case 3: return 8;
    default: return 4;
  }
}

ReplicaLattice build_lattice(std::size_t n_qubits, const std::vector<CircuitLayer>& layers,
                             const SubsystemMask& region, std::size_t n, std::size_t d) {
  if (n_qubits == 0) throw std::invalid_argument("lattice needs at least one qubit");
  if (region.n_qubits() != n_qubits) throw std::invalid_argument("region size does not match circuit");
  if (n == 0) throw std::invalid_argument("replica count must be positive");

  ReplicaLattice lat;
  lat.n = n;
  lat.d = d;
  const std::size_t depth = layers.size();
  lat.n_free = 2 * n_qubits * depth;

  auto sigma = [&](std::size_t t, std::size_t x) { return 2 * (t * n_qubits + x); };
  auto tau = [&](std::size_t t, std::size_t x) { return 2 * (t * n_qubits + x) + 1; };
  auto boundary = [&](std::size_t x) { return lat.n_free + x; };
  auto next = [&](std::size_t t, std::size_t x) { return t + 1 < depth ? sigma(t + 1, x) : boundary(x); };

  const auto g_in = Permutation::cycle(n).inverse();
  for (std::size_t x = 0; x < n_qubits; ++x) {
    lat.pinned.push_back(region.contains(x) ? g_in : Permutation::identity(n));
    lat.initial_sites.push_back(depth > 0 ? sigma(0, x) : boundary(x));
  }
  // Pure product initial state: Tr(chi_sigma^dag rho0^n) = Tr(rho0)... = 1 for every sigma.
  lat.initial_weight.assign(factorial(n), Rational(1));

  for (std::size_t t = 0; t < depth; ++t) {
    std::vector<bool> busy(n_qubits, false);
    for (std::size_t x = 0; x < n_qubits; ++x) {
      lat.links.push_back({ReplicaLattice::LinkKind::Weingarten, sigma(t, x), tau(t, x)});
    }
    for (const auto& [i, j] : layers[t].pairs) {
      if (i >= n_qubits || j >= n_qubits || i == j || busy[i] || busy[j]) {
        throw std::invalid_argument("layer " + std::to_string(t) + " has an invalid pair");
      }
      busy[i] = busy[j] = true;
      lat.plaquettes.push_back({tau(t, i), tau(t, j), next(t, i), next(t, j)});
    }
    for (std::size_t x = 0; x < n_qubits; ++x) {
      if (!busy[x]) lat.links.push_back({ReplicaLattice::LinkKind::Overlap, next(t, x), tau(t, x)});
    }
  }
  return lat;
}

namespace {

using Int128 = __int128;

BigInt to_big(Int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt b = static_cast<std::uint64_t>(u >> 64);
  b <<= 64;
  b += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-b) : b;
}

Int128 to_int128(const BigInt& b) {
  if (b > BigInt(std::numeric_limits<std::int64_t>::max()) || b < BigInt(std::numeric_limits<std::int64_t>::min())) {
    throw std::overflow_error("lattice weight does not fit in 64 bits");
  }
  return static_cast<Int128>(b.convert_to<std::int64_t>());
}

BigInt lcm_of_denominators(const std::vector<Rational>& values) {
  BigInt l = 1;
  for (const auto& v : values) l = boost::multiprecision::lcm(l, BigInt(boost::multiprecision::denominator(v)));
  return l;
}

/// Integer-scaled factor tables for fast enumeration.
struct Evaluator {
  std::size_t P = 0;
  std::vector<std::size_t> mul;   // P x P
  std::vector<std::size_t> inv;   // P
  std::vector<Int128> wg;         // scaled by wg_scale
  std::vector<Int128> overlap;    // d^cyc
  std::vector<Int128> wm;         // P^4
  std::vector<Int128> init;       // scaled by init_scale
  BigInt wg_scale = 1;
  BigInt init_scale = 1;

  explicit Evaluator(const ReplicaLattice& lat) {
    const auto perms = Permutation::all(lat.n);
    P = perms.size();
    mul.resize(P * P);
    inv.resize(P);
    for (std::size_t a = 0; a < P; ++a) {
      inv[a] = perms[a].inverse().lex_rank();
      for (std::size_t b = 0; b < P; ++b) mul[a * P + b] = (perms[a] * perms[b]).lex_rank();
    }
    overlap.resize(P);
    for (std::size_t a = 0; a < P; ++a) {
      Int128 v = 1;
      for (std::size_t k = 0; k < perms[a].cycle_count(); ++k) v *= static_cast<Int128>(lat.d);
      overlap[a] = v;
    }
    bool needs_wg = false;
    for (const auto& l : lat.links) needs_wg |= l.kind == ReplicaLattice::LinkKind::Weingarten;
    wg.assign(P, 0);
    if (needs_wg) {
      const WeingartenTable table(lat.n, lat.d);
      wg_scale = lcm_of_denominators(table.values());
      for (std::size_t a = 0; a < P; ++a) {
        const Rational scaled = table.values()[a] * Rational(wg_scale);
        wg[a] = to_int128(boost::multiprecision::numerator(scaled));
      }
    }
    if (!lat.plaquettes.empty()) {
      wm.resize(P * P * P * P);
      for (std::size_t a = 0; a < P; ++a)
        for (std::size_t b = 0; b < P; ++b)
          for (std::size_t c = 0; c < P; ++c)
            for (std::size_t e = 0; e < P; ++e)
              wm[((a * P + b) * P + c) * P + e] =
                  static_cast<Int128>(wm_weight(perms[a], perms[b], perms[c], perms[e], lat.d));
    }
    init_scale = lcm_of_denominators(lat.initial_weight);
    init.resize(P);
    for (std::size_t a = 0; a < P; ++a) {
      const Rational scaled = lat.initial_weight[a] * Rational(init_scale);
      init[a] = to_int128(boost::multiprecision::numerator(scaled));
    }
  }

  template <typename Visit>
  void factors(const ReplicaLattice& lat, const std::vector<std::uint8_t>& s, Visit&& visit) const {
    for (auto site : lat.initial_sites) {
      if (!visit(init[s[site]])) return;
    }
    for (const auto& l : lat.links) {
      const std::size_t rel = mul[inv[s[l.a]] * P + s[l.b]];
      if (!visit(l.kind == ReplicaLattice::LinkKind::Weingarten ? wg[rel] : overlap[rel])) return;
    }
    for (const auto& q : lat.plaquettes) {
      const std::size_t idx = ((s[q.s1] * P + s[q.s2]) * P + inv[s[q.t1]]) * P + inv[s[q.t2]];
      if (!visit(wm[idx])) return;
    }
  }

  /// Adds the weight of assignment s into (fast, slow).
  void accumulate(const ReplicaLattice& lat, const std::vector<std::uint8_t>& s, Int128& fast, BigInt& slow) const {
    Int128 prod = 1;
    bool overflow = false;
    factors(lat, s, [&](Int128 f) {
      if (f == 0) {
        prod = 0;
        return false;
      }
      if (__builtin_mul_overflow(prod, f, &prod)) {
        overflow = true;
        return false;
      }
      return true;
    });
    if (overflow) {
      BigInt big = 1;
      factors(lat, s, [&](Int128 f) {
        big *= to_big(f);
        return true;
      });
      slow += big;
      return;
    }
    if (prod == 0) return;
    Int128 next = 0;
    if (__builtin_add_overflow(fast, prod, &next)) {
      slow += to_big(fast);
      fast = prod;
    } else {
      fast = next;
    }
  }
};

BigInt sum_range(const ReplicaLattice& lat, const Evaluator& ev, std::uint64_t begin, std::uint64_t end) {
  std::vector<std::uint8_t> s(lat.n_sites(), 0);
  for (std::size_t k = 0; k < lat.pinned.size(); ++k) s[lat.n_free + k] = static_cast<std::uint8_t>(lat.pinned[k].lex_rank());
  std::uint64_t code = begin;
  for (std::size_t k = 0; k < lat.n_free; ++k) {
    s[k] = static_cast<std::uint8_t>(code % ev.P);
    code /= ev.P;
  }
  Int128 fast = 0;
  BigInt slow = 0;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    ev.accumulate(lat, s, fast, slow);
    for (std::size_t k = 0; k < lat.n_free; ++k) {
      if (++s[k] < ev.P) break;
      s[k] = 0;
    }
  }
  return slow + to_big(fast);
}

}  // namespace

Rational partition_function(const ReplicaLattice& lattice, Execution exec) {
  if (lattice.n_free > max_free_sites(lattice.n)) {
    throw std::invalid_argument("lattice has " + std::to_string(lattice.n_free) + " free sites; the cap for n=" +
                                std::to_string(lattice.n) + " is " + std::to_string(max_free_sites(lattice.n)));
  }
  if (lattice.initial_weight.size() != factorial(lattice.n)) {
    throw std::invalid_argument("initial weight table has the wrong size");
  }
  const Evaluator ev(lattice);
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < lattice.n_free; ++k) total *= ev.P;

  BigInt sum = 0;
  if (exec == Execution::Serial || total < 4096) {
    sum = sum_range(lattice, ev, 0, total);
  } else {
    const std::int64_t chunks = 256;
    std::vector<BigInt> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t b = total * static_cast<std::uint64_t>(c) / chunks;
      const std::uint64_t e = total * static_cast<std::uint64_t>(c + 1) / chunks;
      partial[static_cast<std::size_t>(c)] = sum_range(lattice, ev, b, e);
    }
    for (const auto& p : partial) sum += p;
  }

  BigInt scale = 1;
  for (const auto& l : lattice.links) {
    if (l.kind == ReplicaLattice::LinkKind::Weingarten) scale *= ev.wg_scale;
  }
  for (std::size_t k = 0; k < lattice.initial_sites.size(); ++k) scale *= ev.init_scale;
  return Rational(sum, scale);
}

double conditional_renyi(const Rational& z_a, const Rational& z_empty, std::size_t n) {
  if (n < 2) throw std::invalid_argument("conditional Renyi entropy needs n >= 2");
  if (z_empty <= 0 || z_a <= 0) throw std::domain_error("partition functions must be positive");
  const double ratio = static_cast<double>(z_a / z_empty);
  return std::log2(ratio) / (1.0 - static_cast<double>(n));
}

}  // namespace lrmoc
