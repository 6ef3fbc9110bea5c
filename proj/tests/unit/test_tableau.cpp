#include "doctest.h"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "lrmoc/core/tableau.hpp"
#include "lrmoc/oracle/equivalence.hpp"

using namespace lrmoc;

namespace {

std::vector<std::size_t> sites_of(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k) {
    if ((mask >> k) & 1u) out.push_back(k);
  }
  return out;
}

StabilizerTableau random_state(std::size_t n, std::size_t measurements, RandomStream& rng) {
  auto t = StabilizerTableau::plus_state(n);
  for (std::size_t m = 0; m < measurements; ++m) {
    const std::size_t i = uniform_index(rng, n);
    std::size_t j = uniform_index(rng, n - 1);
    if (j >= i) ++j;
    t.measure_parity(static_cast<Basis>(uniform_index(rng, 3)), i, j, rng);
  }
  return t;
}

}  // namespace

TEST_CASE("plus state generators") {
  const auto t = StabilizerTableau::plus_state(4);
  CHECK(t.stabilizer(0).to_string() == "+XIII");
  CHECK(t.stabilizer(1).to_string() == "+IXII");
  CHECK(t.stabilizer(2).to_string() == "+IIXI");
  CHECK(t.stabilizer(3).to_string() == "+IIIX");
  CHECK(t.invariants_hold());
  for (std::uint64_t mask = 1; mask < 15; ++mask) CHECK(t.entropy(sites_of(mask, 4)) == 0);
  CHECK_THROWS(StabilizerTableau::plus_state(0));
}

TEST_CASE("single-qubit X on |+> is deterministic +1") {
  auto t = StabilizerTableau::plus_state(1);
  auto rng = derive_stream(1, 0);
  const auto r = t.measure(PauliString::parse("X"), rng);
  CHECK(r.deterministic);
  CHECK(r.outcome == 1);
}

TEST_CASE("measurement rejects identity and non-unit phases") {
  auto t = StabilizerTableau::plus_state(2);
  auto rng = derive_stream(1, 0);
  CHECK_THROWS_AS(t.measure(PauliString::parse("II"), rng), std::invalid_argument);
  CHECK_THROWS_AS(t.measure(PauliString::parse("-ZZ"), rng), std::invalid_argument);
  CHECK_THROWS_AS(t.measure_parity(Basis::ZZ, 1, 1, rng), std::invalid_argument);
}

TEST_CASE("XX on |++> is deterministic and leaves the tableau unchanged") {
  auto t = StabilizerTableau::plus_state(2);
  const auto before = t;
  auto rng = derive_stream(2, 0);
  const auto r = t.measure_parity(Basis::XX, 0, 1, rng);
  CHECK(r.deterministic);
  CHECK(r.outcome == 1);
  CHECK(t == before);
}

TEST_CASE("ZZ on |++> is a fair coin and creates a Bell pair") {
  auto rng = derive_stream(3, 0);
  int plus = 0;
  const int trials = 10000;
  for (int k = 0; k < trials; ++k) {
    auto t = StabilizerTableau::plus_state(2);
    const auto r = t.measure_parity(Basis::ZZ, 0, 1, rng);
    CHECK_FALSE(r.deterministic);
    plus += r.outcome == 1;
    if (k == 0) {
      const std::array<std::size_t, 1> q0{0};
      CHECK(t.entropy(q0) == 1);
    }
  }
  CHECK(std::abs(plus / double(trials) - 0.5) < 0.02);
}

TEST_CASE("deterministic outcomes follow the recorded sign") {
  auto t = StabilizerTableau::plus_state(3);
  auto rng = derive_stream(4, 0);
  const auto first = t.measure_parity(Basis::ZZ, 0, 2, rng);
  const auto again = t.measure_parity(Basis::ZZ, 0, 2, rng);
  CHECK(again.deterministic);
  CHECK(again.outcome == first.outcome);
  // YY on the pair equals -(XX)(ZZ): its value is fixed by the two.
  const auto yy = t.measure_parity(Basis::YY, 0, 2, rng);
  CHECK(yy.deterministic);
  CHECK(yy.outcome == -first.outcome);
}

TEST_CASE("parity fast path agrees with the general path") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto ra = derive_stream(seed, 1);
    auto rb = derive_stream(seed, 1);
    auto a = StabilizerTableau::plus_state(70);
    auto b = StabilizerTableau::plus_state(70);
    auto pick = derive_stream(seed, 2);
    for (int m = 0; m < 300; ++m) {
      const std::size_t i = uniform_index(pick, 70);
      std::size_t j = uniform_index(pick, 69);
      if (j >= i) ++j;
      const auto basis = static_cast<Basis>(uniform_index(pick, 3));
      const auto x = a.measure_parity(basis, i, j, ra);
      const auto y = b.measure(PauliString::two_site(70, basis, i, j), rb);
      REQUIRE(x.outcome == y.outcome);
      REQUIRE(x.deterministic == y.deterministic);
    }
    CHECK(a == b);
    CHECK(a.invariants_hold());
  }
}

TEST_CASE("invariants, bounds and complementarity on random states") {
  auto rng = derive_stream(5, 0);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + uniform_index(rng, 10);
    const auto t = random_state(n, uniform_index(rng, 4 * n), rng);
    REQUIRE(t.invariants_hold());
    for (int q = 0; q < 30; ++q) {
      std::uint64_t mask = 0;
      while (mask == 0 || mask == (std::uint64_t{1} << n) - 1) mask = rng() & ((std::uint64_t{1} << n) - 1);
      const auto a = sites_of(mask, n);
      const auto b = sites_of(~mask & ((std::uint64_t{1} << n) - 1), n);
      const int s = t.entropy(a);
      CHECK(s >= 0);
      CHECK(s <= static_cast<int>(std::min(a.size(), b.size())));
      CHECK(s == t.entropy(b));
    }
  }
}

TEST_CASE("entropy rejects empty and out-of-range regions") {
  const auto t = StabilizerTableau::plus_state(3);
  CHECK_THROWS(t.entropy(std::vector<std::size_t>{}));
  CHECK_THROWS(t.entropy(std::vector<std::size_t>{3}));
}

TEST_CASE("ancilla-seeded state") {
  {
    const auto t = StabilizerTableau::ancilla_seeded(2, 0);
    CHECK(t.n_qubits() == 3);
    CHECK(t.invariants_hold());
    CHECK(t.entropy(std::vector<std::size_t>{2}) == 1);
    CHECK(t.entropy(std::vector<std::size_t>{1}) == 0);
  }
  {
    const auto t = StabilizerTableau::ancilla_seeded(4, 2);
    const int mi = t.entropy(std::vector<std::size_t>{4}) + t.entropy(std::vector<std::size_t>{2}) -
                   t.entropy(std::vector<std::size_t>{2, 4});
    CHECK(mi == 2);
  }
  CHECK_THROWS(StabilizerTableau::ancilla_seeded(4, 4));
}

TEST_CASE("tableau matches the dense oracle on random circuits") {
  const auto report = verify_against_oracle(8, 60, 2024);
  CHECK(report.circuits == 60);
  CHECK(report.entropy_checks > 0);
  CHECK(report.mismatches == 0);
  CHECK(report.max_entropy_error < 1e-9);
}
