#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace lrmoc {

/// A set of qubit indices within an n-qubit register.
class SubsystemMask {
 public:
  SubsystemMask() = default;
  explicit SubsystemMask(std::size_t n_qubits) : member_(n_qubits, false) {}
  SubsystemMask(std::size_t n_qubits, std::initializer_list<std::size_t> sites);
  SubsystemMask(std::size_t n_qubits, const std::vector<std::size_t>& sites);

  /// Sites [begin, end) taken modulo n.
  static SubsystemMask range(std::size_t n_qubits, std::size_t begin, std::size_t end);
  /// Quarter q in {0,1,2,3} = A, B, C, D of an n-qubit register (n divisible by 4).
  static SubsystemMask quarter(std::size_t n_qubits, std::size_t q);
  static SubsystemMask from_bits(std::size_t n_qubits, unsigned long long bits);

  std::size_t n_qubits() const { return member_.size(); }
  bool contains(std::size_t k) const { return member_[k]; }
  void insert(std::size_t k);
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<std::size_t> sites() const;

  SubsystemMask complement() const;
  bool disjoint(const SubsystemMask& other) const;
  SubsystemMask operator|(const SubsystemMask& other) const;

  friend bool operator==(const SubsystemMask&, const SubsystemMask&) = default;

 private:
  std::vector<bool> member_;
};

}  // namespace lrmoc
