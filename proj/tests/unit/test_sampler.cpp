#include "doctest.h"

#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include "lrmoc/circuit/sampler.hpp"

using namespace lrmoc;

TEST_CASE("truncated power law") {
  const RangeDistribution p(16, 2.0);
  CHECK(p.max_distance() == 8);
  double z = 0.0;
  for (int r = 1; r <= 8; ++r) z += std::pow(r, -2.0);
  double total = 0.0;
  double mean = 0.0;
  for (std::size_t r = 1; r <= 8; ++r) {
    CHECK(p.probability(r) == doctest::Approx(std::pow(double(r), -2.0) / z));
    total += p.probability(r);
    mean += r * p.probability(r);
  }
  CHECK(total == doctest::Approx(1.0));
  CHECK(p.mean() == doctest::Approx(mean));
  CHECK(p.probability(0) == 0.0);
  CHECK(p.probability(9) == 0.0);

  const RangeDistribution flat(10, 0.0);
  CHECK(flat.mean() == doctest::Approx(3.0));

  const RangeDistribution local(12, std::numeric_limits<double>::infinity());
  CHECK(local.probability(1) == 1.0);
  CHECK(local.mean() == 1.0);
  auto rng = derive_stream(1, 0);
  for (int k = 0; k < 100; ++k) CHECK(local.sample(rng) == 1);

  CHECK_THROWS(RangeDistribution(1, 1.0));
  CHECK_THROWS(RangeDistribution(8, -1.0));
}

TEST_CASE("inverse-CDF draws follow the law") {
  const RangeDistribution p(20, 1.5);
  auto rng = derive_stream(2, 0);
  const int draws = 200000;
  std::vector<int> counts(11, 0);
  for (int k = 0; k < draws; ++k) ++counts.at(p.sample(rng));
  double chi2 = 0.0;
  for (std::size_t r = 1; r <= 10; ++r) {
    const double e = draws * p.probability(r);
    chi2 += (counts[r] - e) * (counts[r] - e) / e;
  }
  // 9 degrees of freedom; 27.9 is the 0.999 quantile.
  CHECK(chi2 < 27.9);
}

TEST_CASE("measurements per layer") {
  CHECK(measurements_per_layer(16, 0.0) == 1);
  CHECK(measurements_per_layer(16, 0.25) == 4);
  CHECK(measurements_per_layer(16, 0.5) == 8);
  CHECK(measurements_per_layer(16, 0.02) == 1);
  CHECK_THROWS(measurements_per_layer(16, 0.6));
}

TEST_CASE("layers are disjoint and within range") {
  auto rng = derive_stream(3, 0);
  for (double alpha : {0.0, 1.0, 3.0, std::numeric_limits<double>::infinity()}) {
    for (std::size_t m2 : {std::size_t{1}, std::size_t{4}, std::size_t{8}}) {
      if (std::isinf(alpha) && m2 == 8) continue;
      const CircuitSampler s(16, alpha, m2, BasisMode::random());
      for (int k = 0; k < 200; ++k) {
        const auto layer = s.sample_layer(rng);
        REQUIRE(layer.size() == m2);
        REQUIRE(layer.bases.size() == m2);
        std::set<std::size_t> seen;
        for (auto [i, j] : layer.pairs) {
          CHECK(i != j);
          CHECK(i < 16);
          CHECK(j < 16);
          CHECK(ring_distance(16, i, j) <= 8);
          if (std::isinf(alpha)) CHECK(ring_distance(16, i, j) == 1);
          seen.insert(i);
          seen.insert(j);
        }
        CHECK(seen.size() == 2 * m2);
      }
    }
  }
}

TEST_CASE("over-local full packing either succeeds or reports a packing error") {
  auto rng = derive_stream(4, 0);
  const CircuitSampler s(8, std::numeric_limits<double>::infinity(), 4, BasisMode::random());
  int ok = 0;
  int stuck = 0;
  for (int k = 0; k < 100; ++k) {
    try {
      const auto layer = s.sample_layer(rng);
      CHECK(layer.size() == 4);
      ++ok;
    } catch (const PackingError&) {
      ++stuck;
    }
  }
  CHECK(ok > 0);
  CHECK(stuck > 0);
  // Finite alpha always leaves an admissible partner.
  const CircuitSampler dense(8, 4.0, 4, BasisMode::random());
  for (int k = 0; k < 100; ++k) CHECK(dense.sample_layer(rng).size() == 4);
}

TEST_CASE("basis modes") {
  auto rng = derive_stream(5, 0);
  const CircuitSampler single(8, 1.0, 2, BasisMode::single());
  const CircuitSampler random(8, 1.0, 2, BasisMode::random());
  const CircuitSampler xxz(8, 1.0, 2, BasisMode::xxz(0.7));
  const int draws = 60000;
  std::vector<int> counts_single(3, 0), counts_random(3, 0), counts_xxz(3, 0);
  for (int k = 0; k < draws; ++k) {
    ++counts_single[static_cast<int>(single.sample_basis(rng))];
    ++counts_random[static_cast<int>(random.sample_basis(rng))];
    ++counts_xxz[static_cast<int>(xxz.sample_basis(rng))];
  }
  for (int b = 0; b < 3; ++b) {
    CHECK(std::abs(counts_random[b] / double(draws) - 1.0 / 3.0) < 0.01);
    CHECK(std::abs(counts_single[b] / double(draws) - 1.0 / 3.0) < 0.01);
  }
  CHECK(std::abs(counts_xxz[static_cast<int>(Basis::ZZ)] / double(draws) - 0.7) < 0.01);
  CHECK(std::abs(counts_xxz[static_cast<int>(Basis::XX)] / double(draws) - 0.15) < 0.01);
  CHECK_THROWS(BasisMode::xxz(1.5));
}

TEST_CASE("single-basis layers share one basis") {
  auto rng = derive_stream(6, 0);
  const CircuitSampler s(16, 1.0, 6, BasisMode::single());
  for (int k = 0; k < 100; ++k) {
    const auto layer = s.sample_layer(rng);
    for (auto b : layer.bases) CHECK(b == layer.bases.front());
  }
}

TEST_CASE("cut crossing rule") {
  // Bond index b sits between b-1 and b.
  CHECK(crosses_cut(8, 3, 4, 4));
  CHECK_FALSE(crosses_cut(8, 4, 5, 4));
  CHECK(crosses_cut(8, 7, 0, 0));
  CHECK_FALSE(crosses_cut(8, 7, 0, 4));
  CHECK(crosses_cut(8, 6, 1, 0));
  // Antipodal pairs take the arc running upward from the first site.
  CHECK(crosses_cut(8, 0, 4, 2));
  CHECK_FALSE(crosses_cut(8, 0, 4, 6));
  CHECK_FALSE(crosses_cut(8, 4, 0, 2));
  CHECK(crosses_cut(8, 4, 0, 6));
  CHECK(crosses_cut(8, 4, 0, 0));
  // Every bond is crossed by exactly r of the N pair translates at distance r.
  for (std::size_t r = 1; r <= 4; ++r) {
    for (std::size_t cut = 0; cut < 8; ++cut) {
      std::size_t hits = 0;
      for (std::size_t i = 0; i < 8; ++i) hits += crosses_cut(8, i, (i + r) % 8, cut);
      CHECK(hits == r);
    }
  }
}

TEST_CASE("sparse crossing count matches the exact expectation") {
  auto rng = derive_stream(7, 0);
  const CircuitSampler s(32, 1.0, 1, BasisMode::random());
  const std::size_t layers = 100000;
  const auto hits = count_crossings_mc(s, 16, layers, rng);
  const double expected = expected_crossings(32, 1.0, 1) * layers;
  CHECK(std::abs(double(hits) - expected) < 4.0 * std::sqrt(expected));
}
