#include "lrmoc/core/pauli.hpp"

#include <stdexcept>

namespace lrmoc {

std::string_view to_string(Basis b) {
  switch (b) {
    case Basis::XX: return "XX";
    case Basis::YY: return "YY";
    case Basis::ZZ: return "ZZ";
  }
  return "?";
}

PauliString::PauliString(std::size_t n_qubits)
    : n_(n_qubits), x_(words_for_bits(n_qubits), 0), z_(words_for_bits(n_qubits), 0) {}

PauliString PauliString::parse(std::string_view text) {
  std::uint8_t phase = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    if (text.front() == '-') phase = 2;
    text.remove_prefix(1);
  }
  PauliString p(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    switch (text[k]) {
      case 'I': case '_': break;
      case 'X': p.set(k, true, false); break;
      case 'Y': p.set(k, true, true); break;
      case 'Z': p.set(k, false, true); break;
      default: throw std::invalid_argument("invalid Pauli character in '" + std::string(text) + "'");
    }
  }
  p.phase_ = phase;
  return p;
}

PauliString PauliString::two_site(std::size_t n_qubits, Basis basis, std::size_t i, std::size_t j) {
  if (i >= n_qubits || j >= n_qubits || i == j) {
    throw std::invalid_argument("parity check needs two distinct in-range sites");
  }
  PauliString p(n_qubits);
  const bool xb = basis != Basis::ZZ;
  const bool zb = basis != Basis::XX;
  p.set(i, xb, zb);
  p.set(j, xb, zb);
  return p;
}

PauliString PauliString::single(std::size_t n_qubits, char op, std::size_t site) {
  if (site >= n_qubits) throw std::out_of_range("site out of range");
  PauliString p(n_qubits);
  switch (op) {
    case 'X': p.set(site, true, false); break;
    case 'Y': p.set(site, true, true); break;
    case 'Z': p.set(site, false, true); break;
    default: throw std::invalid_argument("single-site Pauli must be X, Y or Z");
  }
  return p;
}

void PauliString::set(std::size_t k, bool x_bit, bool z_bit) {
  set_bit(x_, k, x_bit);
  set_bit(z_, k, z_bit);
}

char PauliString::op(std::size_t k) const {
  const bool xb = x(k);
  const bool zb = z(k);
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

bool PauliString::is_identity() const {
  for (std::size_t w = 0; w < x_.size(); ++w) {
    if (x_[w] | z_[w]) return false;
  }
  return true;
}

std::size_t PauliString::weight() const {
  std::size_t count = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) count += static_cast<std::size_t>(__builtin_popcountll(x_[w] | z_[w]));
  return count;
}

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> sites;
  for (std::size_t k = 0; k < n_; ++k) {
    if (x(k) || z(k)) sites.push_back(k);
  }
  return sites;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (other.n_ != n_) throw std::invalid_argument("Pauli strings of different length");
  Word acc = 0;
  int parity = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) {
    acc = (x_[w] & other.z_[w]) ^ (z_[w] & other.x_[w]);
    parity ^= __builtin_popcountll(acc) & 1;
  }
  return parity == 0;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("Pauli strings of different length");
  unsigned phase = phase_ + rhs.phase_;
  for (std::size_t w = 0; w < x_.size(); ++w) {
    phase += pauli_product_phase(x_[w], z_[w], rhs.x_[w], rhs.z_[w]);
    x_[w] ^= rhs.x_[w];
    z_[w] ^= rhs.z_[w];
  }
  phase_ = static_cast<std::uint8_t>(phase & 3u);
  return *this;
}

std::string PauliString::to_string() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string s = kPrefix[phase_];
  for (std::size_t k = 0; k < n_; ++k) s.push_back(op(k));
  return s;
}

}  // namespace lrmoc
