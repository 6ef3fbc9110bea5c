#include "lrmoc/observables/observables.hpp"

#include <array>
#include <stdexcept>

#include "lrmoc/circuit/sampler.hpp"

namespace lrmoc {

namespace {

void require_nonempty(const SubsystemMask& m) {
  if (m.empty()) throw std::invalid_argument("region must be non-empty");
}

void require_disjoint(const SubsystemMask& a, const SubsystemMask& b) {
  if (!a.disjoint(b)) throw std::invalid_argument("regions must be disjoint");
}

}  // namespace

int entropy(const StabilizerTableau& state, const SubsystemMask& region) {
  if (region.n_qubits() != state.n_qubits()) throw std::invalid_argument("mask size does not match state");
  const auto sites = region.sites();
  return state.entropy(sites);
}

int mutual_information(const StabilizerTableau& state, const SubsystemMask& a, const SubsystemMask& b) {
  require_nonempty(a);
  require_nonempty(b);
  require_disjoint(a, b);
  return entropy(state, a) + entropy(state, b) - entropy(state, a | b);
}

int tripartite_mutual_information(const StabilizerTableau& state, const SubsystemMask& a,
                                  const SubsystemMask& b, const SubsystemMask& c) {
  require_nonempty(a);
  require_nonempty(b);
  require_nonempty(c);
  require_disjoint(a, b);
  require_disjoint(a, c);
  require_disjoint(b, c);
  const int sa = entropy(state, a);
  const int sb = entropy(state, b);
  const int sc = entropy(state, c);
  const int sab = entropy(state, a | b);
  const int sac = entropy(state, a | c);
  const int sbc = entropy(state, b | c);
  const int sabc = entropy(state, a | b | c);
  return sa + sb + sc - sab - sac - sbc + sabc;
}

std::vector<std::size_t> bell_census(const StabilizerTableau& state, std::size_t n_system) {
  if (n_system < 2 || n_system > state.n_qubits()) throw std::invalid_argument("bad system size for census");
  std::vector<std::size_t> hist(n_system / 2, 0);
  std::vector<std::size_t> maximal;
  for (std::size_t i = 0; i < n_system; ++i) {
    const std::array<std::size_t, 1> site{i};
    if (state.entropy(site) == 1) maximal.push_back(i);
  }
  for (std::size_t a = 0; a < maximal.size(); ++a) {
    for (std::size_t b = a + 1; b < maximal.size(); ++b) {
      const std::array<std::size_t, 2> pair{maximal[a], maximal[b]};
      if (state.entropy(pair) == 0) ++hist[ring_distance(n_system, pair[0], pair[1]) - 1];
    }
  }
  return hist;
}

int ancilla_entropy(const StabilizerTableau& state) {
  const std::array<std::size_t, 1> site{state.n_qubits() - 1};
  return state.entropy(site);
}

std::vector<int> mi_profile(const StabilizerTableau& state, std::size_t n_system, std::size_t base) {
  if (n_system < 2 || n_system > state.n_qubits()) throw std::invalid_argument("bad system size for profile");
  std::vector<int> out(n_system / 2, 0);
  const std::array<std::size_t, 1> q0{base % n_system};
  const int s0 = state.entropy(q0);
  for (std::size_t r = 1; r <= n_system / 2; ++r) {
    const std::array<std::size_t, 1> qr{(base + r) % n_system};
    const std::array<std::size_t, 2> both{q0[0], qr[0]};
    out[r - 1] = s0 + state.entropy(qr) - state.entropy(both);
  }
  return out;
}

ObservableSet measure_observables(const StabilizerTableau& state, std::size_t n_system,
                                  const ObservableSelection& select) {
  if (n_system % 4 != 0 || n_system > state.n_qubits()) {
    throw std::invalid_argument("standard probes need a system size divisible by 4");
  }
  const std::size_t n = state.n_qubits();
  const std::size_t quarter = n_system / 4;
  ObservableSet out;
  if (select.half_entropy) {
    out.s_half = entropy(state, SubsystemMask::range(n, 0, 2 * quarter));
  }
  if (select.antipodal_mi) {
    out.mi_antipodal = mutual_information(state, SubsystemMask(n, {0}), SubsystemMask(n, {n_system / 2 - 1}));
  }
  if (select.tmi) {
    out.tmi = tripartite_mutual_information(state, SubsystemMask::range(n, 0, quarter),
                                            SubsystemMask::range(n, quarter, 2 * quarter),
                                            SubsystemMask::range(n, 2 * quarter, 3 * quarter));
  }
  if (select.ancilla) {
    if (n != n_system + 1) throw std::invalid_argument("ancilla probe needs an ancilla-seeded state");
    out.s_ancilla = ancilla_entropy(state);
  }
  if (select.bell) out.bell_histogram = bell_census(state, n_system);
  return out;
}

}  // namespace lrmoc
