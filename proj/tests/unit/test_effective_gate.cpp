#include "doctest.h"

#include "lrmoc/replica/effective_gate.hpp"

using namespace lrmoc;

TEST_CASE("projected parity check is C + J (ZZ + XX)") {
  const auto g = effective_gate_projection();
  CHECK(g.c == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(g.j == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(g.residual < 1e-10);
  // The raw block is symmetric in the two replicas of each site.
  CHECK((g.raw - g.raw.transpose()).norm() < 1e-12);
  CHECK(g.gram(0, 0) == 4.0);
  CHECK(g.gram(0, 1) == 2.0);
}

TEST_CASE("other local dimensions are rejected") {
  CHECK_THROWS(effective_gate_projection(3));
}
