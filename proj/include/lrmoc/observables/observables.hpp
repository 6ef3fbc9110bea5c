#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lrmoc/core/subsystem.hpp"
#include "lrmoc/core/tableau.hpp"

namespace lrmoc {

int entropy(const StabilizerTableau& state, const SubsystemMask& region);

/// S_a + S_b - S_ab in bits. Masks must be disjoint and non-empty.
int mutual_information(const StabilizerTableau& state, const SubsystemMask& a, const SubsystemMask& b);

/// I(a;b) + I(a;c) - I(a;bc) in bits.
int tripartite_mutual_information(const StabilizerTableau& state, const SubsystemMask& a,
                                  const SubsystemMask& b, const SubsystemMask& c);

/// Pairs (i, j) among the first n_system qubits with S_i = S_j = 1 and
/// S_ij = 0, binned by ring distance. Index r-1 holds the count at distance r.
std::vector<std::size_t> bell_census(const StabilizerTableau& state, std::size_t n_system);

/// Entropy of the last qubit of an ancilla-seeded state.
int ancilla_entropy(const StabilizerTableau& state);

/// Mutual information I(q_0; q_r) for r = 1..n_system/2 (index r-1).
std::vector<int> mi_profile(const StabilizerTableau& state, std::size_t n_system, std::size_t base = 0);

struct ObservableSelection {
  bool half_entropy = true;
  bool antipodal_mi = true;
  bool tmi = true;
  bool ancilla = false;
  bool bell = false;

  friend bool operator==(const ObservableSelection&, const ObservableSelection&) = default;
};

struct ObservableSet {
  int s_half = 0;
  int mi_antipodal = 0;
  int tmi = 0;
  std::optional<int> s_ancilla;
  std::vector<std::size_t> bell_histogram;

  friend bool operator==(const ObservableSet&, const ObservableSet&) = default;
};

/// Standard probes on the first n_system qubits (divisible by 4):
/// S(AB), I(q_0; q_{N/2-1}), I3(A;B;C) with contiguous quarters A..D.
ObservableSet measure_observables(const StabilizerTableau& state, std::size_t n_system,
                                  const ObservableSelection& select);

}  // namespace lrmoc
