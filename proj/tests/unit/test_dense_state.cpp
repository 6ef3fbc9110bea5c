#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "lrmoc/core/tableau.hpp"
#include "lrmoc/oracle/dense_state.hpp"

using namespace lrmoc;

TEST_CASE("ZZ projection of |++> gives a Bell state") {
  auto s = DenseState::plus_state(2);
  s.project(PauliString::parse("ZZ"), 1);
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(s.amplitudes()(0) - h) < 1e-12);
  CHECK(std::abs(s.amplitudes()(3) - h) < 1e-12);
  CHECK(std::abs(s.amplitudes()(1)) < 1e-12);
  CHECK(std::abs(s.norm() - 1.0) < 1e-10);
}

TEST_CASE("ZZ on |00> is deterministic") {
  auto s = DenseState::zero_state(2);
  auto rng = derive_stream(1, 0);
  const auto before = s.amplitudes();
  CHECK(s.measure_parity(Basis::ZZ, 0, 1, rng) == 1);
  CHECK((s.amplitudes() - before).norm() < 1e-12);
  CHECK_THROWS(s.project(PauliString::parse("ZZ"), -1));
}

TEST_CASE("dense entropies of textbook states") {
  auto bell = DenseState::plus_state(2);
  bell.project(PauliString::parse("ZZ"), 1);
  CHECK(std::abs(dense_entropy(bell, std::vector<std::size_t>{0}) - 1.0) < 1e-9);
  CHECK(std::abs(dense_entropy(DenseState::plus_state(3), std::vector<std::size_t>{1}) - 0.0) < 1e-9);

  Eigen::VectorXcd ghz = Eigen::VectorXcd::Zero(16);
  ghz(0) = ghz(15) = 1.0 / std::sqrt(2.0);
  const auto g = DenseState::from_amplitudes(4, ghz);
  CHECK(std::abs(dense_entropy(g, std::vector<std::size_t>{0, 1}) - 1.0) < 1e-9);
  CHECK(std::abs(dense_entropy(g, std::vector<std::size_t>{0, 1, 2}) - 1.0) < 1e-9);
}

TEST_CASE("Y acts as i X Z") {
  const auto s = DenseState::zero_state(1);
  const auto y0 = s.apply_pauli(PauliString::parse("Y"));
  CHECK(std::abs(y0(1) - std::complex<double>(0, 1)) < 1e-12);
}

TEST_CASE("ancilla-seeded dense state matches the tableau") {
  const auto d = DenseState::ancilla_seeded(4, 1);
  const auto t = StabilizerTableau::ancilla_seeded(4, 1);
  for (std::size_t k = 0; k < 5; ++k) {
    const std::vector<std::size_t> r{k};
    CHECK(std::abs(dense_entropy(d, r) - t.entropy(r)) < 1e-9);
  }
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(std::abs(d.probability_plus(t.stabilizer(k)) - 1.0) < 1e-12);
  }
}

TEST_CASE("Haar single-qubit unitaries") {
  auto rng = derive_stream(7, 0);
  const int samples = 100000;
  double m = 0.0;
  double m2 = 0.0;
  for (int k = 0; k < samples; ++k) {
    const auto u = haar_single_qubit(rng);
    if (k < 1000) CHECK((u.adjoint() * u - Eigen::Matrix2cd::Identity()).norm() < 1e-12);
    const double v = std::norm(u(0, 0));
    m += v;
    m2 += v * v;
  }
  m /= samples;
  const double sd = std::sqrt((m2 / samples - m * m) / samples);
  CHECK(std::abs(m - 0.5) < 3 * sd);
}

TEST_CASE("paired outcome frequencies match the tableau") {
  // Same circuit, independent streams: the +1 frequency of one indeterminate
  // check after a fixed prefix agrees within 5 sigma.
  const int runs = 10000;
  int plus_stab = 0;
  int plus_dense = 0;
  for (int k = 0; k < runs; ++k) {
    auto ra = derive_stream(100, static_cast<std::uint64_t>(k));
    auto rb = derive_stream(200, static_cast<std::uint64_t>(k));
    auto t = StabilizerTableau::plus_state(8);
    auto d = DenseState::plus_state(8);
    t.measure_parity(Basis::ZZ, 0, 5, ra);
    d.measure_parity(Basis::ZZ, 0, 5, rb);
    t.measure_parity(Basis::YY, 2, 3, ra);
    d.measure_parity(Basis::YY, 2, 3, rb);
    plus_stab += t.measure_parity(Basis::XX, 5, 2, ra).outcome == 1;
    plus_dense += d.measure_parity(Basis::XX, 5, 2, rb) == 1;
  }
  const double sigma = std::sqrt(runs * 0.25);
  CHECK(std::abs(plus_stab - plus_dense) < 5 * std::sqrt(2.0) * sigma);
}
