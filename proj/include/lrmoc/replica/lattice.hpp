#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lrmoc/circuit/sampler.hpp"
#include "lrmoc/core/execution.hpp"
#include "lrmoc/core/subsystem.hpp"
#include "lrmoc/replica/permutation.hpp"
#include "lrmoc/replica/weingarten.hpp"

namespace lrmoc {

/// Spacetime lattice of S_n spins for a circuit of alternating single-qubit
/// Haar layers and ZZ parity checks.
///
/// Each layer t and qubit x carries an input spin sigma (contracted with what
/// came before) and an output spin tau, joined by a Weingarten link. A
/// measured pair (i, j) in layer t contributes W_M(tau_i, tau_j, s_i^-1, s_j^-1)
/// where s are the spins that follow (next layer input or the final
/// boundary); an idle qubit contributes the overlap d^cyc(s^-1 tau). Final
/// boundary spins are pinned to g_x^-1 with g_x the n-cycle on A and the
/// identity elsewhere.
struct ReplicaLattice {
  enum class LinkKind : std::uint8_t { Weingarten, Overlap };

  struct Link {
    LinkKind kind;
    std::size_t a;
    std::size_t b;
  };

  /// W_M(s1, s2, t1^-1, t2^-1) on four sites.
  struct Plaquette {
    std::size_t s1;
    std::size_t s2;
    std::size_t t1;
    std::size_t t2;
  };

  std::size_t n = 2;
  std::size_t d = 2;
  std::size_t n_free = 0;
  /// Pinned values for sites n_free, n_free+1, ...
  std::vector<Permutation> pinned;
  std::vector<Link> links;
  std::vector<Plaquette> plaquettes;
  /// Sites carrying the initial-state weight Tr(chi_sigma^dag rho0^n).
  std::vector<std::size_t> initial_sites;
  /// Initial-state weight per permutation, indexed by lex rank.
  std::vector<Rational> initial_weight;

  std::size_t n_sites() const { return n_free + pinned.size(); }
};

/// Largest number of summed sites accepted by partition_function.
std::size_t max_free_sites(std::size_t n);

/// Builds the lattice for the given layers (bases are ignored: every check is
/// mapped to ZZ after Haar dressing). Region A selects the pinned boundary.
ReplicaLattice build_lattice(std::size_t n_qubits, const std::vector<CircuitLayer>& layers,
                             const SubsystemMask& region, std::size_t n, std::size_t d = 2);

/// Exact sum over all S_n assignments of the free sites.
Rational partition_function(const ReplicaLattice& lattice, Execution exec = Execution::Parallel);

/// (log2 z_a - log2 z_empty) / (1 - n), in bits.
double conditional_renyi(const Rational& z_a, const Rational& z_empty, std::size_t n);

}  // namespace lrmoc
