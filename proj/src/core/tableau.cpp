#include "lrmoc/core/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lrmoc {

StabilizerTableau::StabilizerTableau(std::size_t n_qubits)
    : n_(n_qubits),
      words_(words_for_bits(n_qubits)),
      stride_(2 * words_),
      bits_(2 * n_qubits * stride_, 0),
      signs_(words_for_bits(2 * n_qubits), 0) {}

StabilizerTableau StabilizerTableau::plus_state(std::size_t n_qubits) {
  if (n_qubits == 0) throw std::invalid_argument("tableau needs at least one qubit");
  StabilizerTableau t(n_qubits);
  for (std::size_t k = 0; k < n_qubits; ++k) {
    set_bit(t.zs(k), k, true);
    set_bit(t.xs(n_qubits + k), k, true);
  }
  return t;
}

StabilizerTableau StabilizerTableau::ancilla_seeded(std::size_t n_system, std::size_t seed_site) {
  if (n_system == 0) throw std::invalid_argument("tableau needs at least one system qubit");
  if (seed_site >= n_system) throw std::out_of_range("ancilla seed site out of range");
  const std::size_t n = n_system + 1;
  const std::size_t anc = n_system;
  StabilizerTableau t = plus_state(n);
  // Bell pair on (seed, anc): stabilizers X_s X_a and Z_s Z_a with
  // destabilizers Z_s and X_a.
  const std::size_t s = seed_site;
  set_bit(t.xs(n + s), anc, true);  // X_s -> X_s X_a
  std::fill(t.xs(n + anc).begin(), t.xs(n + anc).end(), 0);
  set_bit(t.zs(n + anc), s, true);  // X_a -> Z_s Z_a
  set_bit(t.zs(n + anc), anc, true);
  std::fill(t.zs(anc).begin(), t.zs(anc).end(), 0);
  set_bit(t.xs(anc), anc, true);    // Z_a -> X_a
  return t;
}

void StabilizerTableau::multiply_row(std::size_t h, std::size_t src) {
  auto hx = xs(h);
  auto hz = zs(h);
  auto sx = xs(src);
  auto sz = zs(src);
  unsigned phase = (sign(h) ? 2u : 0u) + (sign(src) ? 2u : 0u);
  for (std::size_t w = 0; w < words_; ++w) {
    phase += pauli_product_phase(sx[w], sz[w], hx[w], hz[w]);
    hx[w] ^= sx[w];
    hz[w] ^= sz[w];
  }
  assert((phase & 1u) == 0);
  set_sign(h, (phase & 3u) == 2u);
}

PauliString StabilizerTableau::row_as_pauli(std::size_t r) const {
  PauliString p(n_);
  for (std::size_t k = 0; k < n_; ++k) p.set(k, get_bit(xs(r), k), get_bit(zs(r), k));
  p.set_phase(sign(r) ? 2 : 0);
  return p;
}

void StabilizerTableau::set_row(std::size_t r, const PauliString& p, bool negative) {
  auto x = xs(r);
  auto z = zs(r);
  std::copy(p.x_words().begin(), p.x_words().end(), x.begin());
  std::copy(p.z_words().begin(), p.z_words().end(), z.begin());
  set_sign(r, negative);
}

template <typename Anticommutes>
MeasurementResult StabilizerTableau::measure_impl(const PauliString* op, Anticommutes&& anticommutes,
                                                  RandomStream& rng, Basis basis, std::size_t i,
                                                  std::size_t j) {
  const std::size_t n = n_;
  std::size_t pivot = 2 * n;
  for (std::size_t r = n; r < 2 * n; ++r) {
    if (anticommutes(r)) {
      pivot = r;
      break;
    }
  }

  if (pivot == 2 * n) {
    // op = +/- product of the stabilizers whose destabilizer anticommutes with op.
    std::vector<Word> acc_x(words_, 0);
    std::vector<Word> acc_z(words_, 0);
    unsigned phase = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (!anticommutes(k)) continue;
      const std::size_t r = n + k;
      auto sx = xs(r);
      auto sz = zs(r);
      phase += sign(r) ? 2u : 0u;
      for (std::size_t w = 0; w < words_; ++w) {
        phase += pauli_product_phase(acc_x[w], acc_z[w], sx[w], sz[w]);
        acc_x[w] ^= sx[w];
        acc_z[w] ^= sz[w];
      }
    }
    assert((phase & 1u) == 0);
    return {(phase & 3u) == 0 ? 1 : -1, true};
  }

  for (std::size_t r = 0; r < 2 * n; ++r) {
    if (r != pivot && r != pivot - n && anticommutes(r)) multiply_row(r, pivot);
  }
  // Old stabilizer becomes the destabilizer of the new one.
  std::copy(bits_.begin() + static_cast<std::ptrdiff_t>(pivot * stride_),
            bits_.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * stride_),
            bits_.begin() + static_cast<std::ptrdiff_t>((pivot - n) * stride_));
  set_sign(pivot - n, sign(pivot));

  const bool negative = random_bit(rng);
  if (op != nullptr) {
    set_row(pivot, *op, negative);
  } else {
    std::fill(xs(pivot).begin(), xs(pivot).end(), 0);
    std::fill(zs(pivot).begin(), zs(pivot).end(), 0);
    const bool xb = basis != Basis::ZZ;
    const bool zb = basis != Basis::XX;
    set_bit(xs(pivot), i, xb);
    set_bit(xs(pivot), j, xb);
    set_bit(zs(pivot), i, zb);
    set_bit(zs(pivot), j, zb);
    set_sign(pivot, negative);
  }
  return {negative ? -1 : 1, false};
}

MeasurementResult StabilizerTableau::measure(const PauliString& op, RandomStream& rng) {
  if (op.n_qubits() != n_) throw std::invalid_argument("operator size does not match tableau");
  if (op.is_identity()) throw std::invalid_argument("cannot measure the identity operator");
  if (op.phase() != 0) throw std::invalid_argument("measured operator must have phase +1");

  const auto support = op.support();
  if (support.size() <= 8) {
    std::vector<std::pair<bool, bool>> ops;
    ops.reserve(support.size());
    for (auto k : support) ops.emplace_back(op.x(k), op.z(k));
    auto anticommutes = [&](std::size_t r) {
      auto x = xs(r);
      auto z = zs(r);
      bool acc = false;
      for (std::size_t s = 0; s < support.size(); ++s) {
        const std::size_t k = support[s];
        acc ^= (get_bit(x, k) && ops[s].second) != (get_bit(z, k) && ops[s].first);
      }
      return acc;
    };
    return measure_impl(&op, anticommutes, rng, Basis::ZZ, 0, 0);
  }
  auto ox = op.x_words();
  auto oz = op.z_words();
  auto anticommutes = [&](std::size_t r) {
    auto x = xs(r);
    auto z = zs(r);
    int parity = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      parity ^= __builtin_popcountll((x[w] & oz[w]) ^ (z[w] & ox[w])) & 1;
    }
    return parity != 0;
  };
  return measure_impl(&op, anticommutes, rng, Basis::ZZ, 0, 0);
}

MeasurementResult StabilizerTableau::measure_parity(Basis basis, std::size_t i, std::size_t j,
                                                    RandomStream& rng) {
  if (i >= n_ || j >= n_ || i == j) throw std::invalid_argument("parity check needs two distinct in-range sites");
  const std::size_t wi = i / kWordBits;
  const std::size_t wj = j / kWordBits;
  const unsigned bi = i % kWordBits;
  const unsigned bj = j % kWordBits;
  const Word* base = bits_.data();
  const std::size_t stride = stride_;
  const std::size_t zoff = words_;
  // Symplectic product with P_i P_j: XX sees Z bits, ZZ sees X bits, YY sees X^Z.
  auto anticommutes = [=](std::size_t r) {
    const Word* row = base + r * stride;
    const Word xi = row[wi] >> bi;
    const Word xj = row[wj] >> bj;
    const Word zi = row[zoff + wi] >> bi;
    const Word zj = row[zoff + wj] >> bj;
    Word v = 0;
    switch (basis) {
      case Basis::XX: v = zi ^ zj; break;
      case Basis::ZZ: v = xi ^ xj; break;
      case Basis::YY: v = xi ^ xj ^ zi ^ zj; break;
    }
    return (v & 1u) != 0;
  };
  return measure_impl(nullptr, anticommutes, rng, basis, i, j);
}

BitMatrix StabilizerTableau::restricted_check_matrix(std::span<const std::size_t> region) const {
  BitMatrix m(n_, 2 * region.size());
  for (std::size_t k = 0; k < n_; ++k) {
    const std::size_t r = n_ + k;
    auto x = xs(r);
    auto z = zs(r);
    auto out = m.row(k);
    for (std::size_t a = 0; a < region.size(); ++a) {
      const std::size_t site = region[a];
      if (get_bit(x, site)) set_bit(out, 2 * a, true);
      if (get_bit(z, site)) set_bit(out, 2 * a + 1, true);
    }
  }
  return m;
}

int StabilizerTableau::entropy(std::span<const std::size_t> region) const {
  if (region.empty()) throw std::invalid_argument("entropy of an empty region");
  for (auto s : region) {
    if (s >= n_) throw std::out_of_range("region site out of range");
  }
  const auto rank = gf2_rank(restricted_check_matrix(region));
  return static_cast<int>(rank) - static_cast<int>(region.size());
}

bool StabilizerTableau::invariants_hold() const {
  const std::size_t n = n_;
  auto symplectic = [&](std::size_t a, std::size_t b) {
    int parity = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      parity ^= __builtin_popcountll((xs(a)[w] & zs(b)[w]) ^ (zs(a)[w] & xs(b)[w])) & 1;
    }
    return parity;
  };
  for (std::size_t a = 0; a < 2 * n; ++a) {
    for (std::size_t b = a + 1; b < 2 * n; ++b) {
      // Stabilizers commute pairwise, destabilizers commute pairwise, and
      // destabilizer k anticommutes exactly with stabilizer k.
      const bool expect_anti = (a < n && b == a + n);
      if (symplectic(a, b) != (expect_anti ? 1 : 0)) return false;
    }
  }
  BitMatrix full(n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t q = 0; q < n; ++q) {
      full.set(k, q, get_bit(xs(n + k), q));
      full.set(k, n + q, get_bit(zs(n + k), q));
    }
  }
  return gf2_rank(full) == n;
}

}  // namespace lrmoc
