#include "doctest.h"

#include <cmath>
#include <vector>

#include "lrmoc/replica/haar_replica.hpp"
#include "lrmoc/replica/lattice.hpp"

using namespace lrmoc;

namespace {

CircuitLayer layer_of(std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  CircuitLayer l;
  l.pairs = std::move(pairs);
  l.bases.assign(l.pairs.size(), Basis::ZZ);
  return l;
}

double lattice_ratio(std::size_t n_qubits, const std::vector<CircuitLayer>& layers, const SubsystemMask& a,
                     std::size_t n, Execution exec = Execution::Parallel) {
  const auto za = partition_function(build_lattice(n_qubits, layers, a, n), exec);
  const auto z0 = partition_function(build_lattice(n_qubits, layers, SubsystemMask(n_qubits), n), exec);
  return static_cast<double>(za / z0);
}

}  // namespace

TEST_CASE("empty circuit is a pure product state") {
  const auto lat = build_lattice(3, {}, SubsystemMask::range(3, 0, 2), 2);
  CHECK(lat.n_free == 0);
  CHECK(partition_function(lat) == 1);
}

TEST_CASE("lattice structure") {
  const std::vector<CircuitLayer> layers{layer_of({{0, 1}}), layer_of({{1, 2}})};
  const auto lat = build_lattice(3, layers, SubsystemMask::range(3, 0, 1), 2);
  CHECK(lat.n_free == 12);
  CHECK(lat.pinned.size() == 3);
  CHECK(lat.plaquettes.size() == 2);
  CHECK(lat.pinned[0] == Permutation::cycle(2).inverse());
  CHECK(lat.pinned[1].is_identity());
  CHECK_THROWS(build_lattice(3, {layer_of({{0, 0}})}, SubsystemMask(3), 2));
  CHECK_THROWS(build_lattice(3, {layer_of({{0, 1}, {1, 2}})}, SubsystemMask(3), 2));
}

TEST_CASE("conditional Renyi entropy") {
  CHECK(conditional_renyi(Rational(1, 2), Rational(1), 2) == doctest::Approx(1.0));
  CHECK(conditional_renyi(Rational(1, 4), Rational(1), 3) == doctest::Approx(1.0));
  CHECK_THROWS(conditional_renyi(Rational(0), Rational(1), 2));
  CHECK_THROWS(conditional_renyi(Rational(1), Rational(1), 1));
}

TEST_CASE("serial and parallel evaluation agree") {
  const std::vector<CircuitLayer> layers{layer_of({{0, 2}}), layer_of({{1, 3}, {0, 2}})};
  const auto lat = build_lattice(4, layers, SubsystemMask::range(4, 0, 2), 2);
  CHECK(partition_function(lat, Execution::Serial) == partition_function(lat, Execution::Parallel));
}

TEST_CASE("a single check on two qubits") {
  // Haar-dressed |++> then ZZ: the pair is entangled with average purity below 1.
  const std::vector<CircuitLayer> layers{layer_of({{0, 1}})};
  const auto a = SubsystemMask::range(2, 0, 1);
  const double exact = lattice_ratio(2, layers, a, 2);
  CHECK(exact > 0.0);
  CHECK(exact < 1.0);
  auto rng = derive_stream(21, 0);
  const auto mc = haar_mc_replica(2, layers, a, 2, 40000, rng);
  CHECK(std::abs(exact - mc.value) < 4.0 * mc.std_error + 1e-12);
}

TEST_CASE("idle qubits keep the region pure") {
  const std::vector<CircuitLayer> layers{layer_of({{0, 1}})};
  CHECK(lattice_ratio(3, layers, SubsystemMask::range(3, 2, 3), 2) == doctest::Approx(1.0));
}

TEST_CASE("three-replica lattice against Monte Carlo") {
  const std::vector<CircuitLayer> layers{layer_of({{0, 1}})};
  const auto a = SubsystemMask::range(2, 0, 1);
  auto rng = derive_stream(22, 0);
  const auto mc = haar_mc_replica(2, layers, a, 3, 40000, rng);
  // d = 2 < n = 3 leaves the Gram matrix singular.
  CHECK_THROWS_AS(lattice_ratio(2, layers, a, 3), SingularGramError);
  CHECK(mc.value > 0.0);
  CHECK(mc.value < 1.0);
}
