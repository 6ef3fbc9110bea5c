#include "lrmoc/core/subsystem.hpp"

#include <stdexcept>

namespace lrmoc {

SubsystemMask::SubsystemMask(std::size_t n_qubits, std::initializer_list<std::size_t> sites)
    : member_(n_qubits, false) {
  for (auto s : sites) insert(s);
}

SubsystemMask::SubsystemMask(std::size_t n_qubits, const std::vector<std::size_t>& sites)
    : member_(n_qubits, false) {
  for (auto s : sites) insert(s);
}

SubsystemMask SubsystemMask::range(std::size_t n_qubits, std::size_t begin, std::size_t end) {
  SubsystemMask m(n_qubits);
  for (std::size_t k = begin; k < end; ++k) m.insert(k % n_qubits);
  return m;
}

SubsystemMask SubsystemMask::quarter(std::size_t n_qubits, std::size_t q) {
  if (n_qubits % 4 != 0 || q > 3) {
    throw std::invalid_argument("quarter masks need n divisible by 4 and q < 4");
  }
  const std::size_t len = n_qubits / 4;
  return range(n_qubits, q * len, (q + 1) * len);
}

SubsystemMask SubsystemMask::from_bits(std::size_t n_qubits, unsigned long long bits) {
  SubsystemMask m(n_qubits);
  for (std::size_t k = 0; k < n_qubits; ++k) {
    if ((bits >> k) & 1ULL) m.insert(k);
  }
  return m;
}

void SubsystemMask::insert(std::size_t k) {
  if (k >= member_.size()) throw std::out_of_range("subsystem site out of range");
  member_[k] = true;
}

std::size_t SubsystemMask::size() const {
  std::size_t count = 0;
  for (bool b : member_) count += b ? 1 : 0;
  return count;
}

std::vector<std::size_t> SubsystemMask::sites() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < member_.size(); ++k) {
    if (member_[k]) out.push_back(k);
  }
  return out;
}

SubsystemMask SubsystemMask::complement() const {
  SubsystemMask m(member_.size());
  for (std::size_t k = 0; k < member_.size(); ++k) m.member_[k] = !member_[k];
  return m;
}

bool SubsystemMask::disjoint(const SubsystemMask& other) const {
  if (other.n_qubits() != n_qubits()) throw std::invalid_argument("mask size mismatch");
  for (std::size_t k = 0; k < member_.size(); ++k) {
    if (member_[k] && other.member_[k]) return false;
  }
  return true;
}

SubsystemMask SubsystemMask::operator|(const SubsystemMask& other) const {
  if (other.n_qubits() != n_qubits()) throw std::invalid_argument("mask size mismatch");
  SubsystemMask m(member_.size());
  for (std::size_t k = 0; k < member_.size(); ++k) m.member_[k] = member_[k] || other.member_[k];
  return m;
}

}  // namespace lrmoc
