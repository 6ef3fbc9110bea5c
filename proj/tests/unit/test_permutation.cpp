#include "doctest.h"

#include <set>
#include <vector>

#include "lrmoc/replica/permutation.hpp"

using namespace lrmoc;

TEST_CASE("construction and validation") {
  CHECK_THROWS(Permutation({0, 0, 1}));
  CHECK_THROWS(Permutation({0, 3}));
  const auto c = Permutation::cycle(4);
  CHECK(c(0) == 1);
  CHECK(c(3) == 0);
  CHECK(c.cycle_count() == 1);
  CHECK(Permutation::identity(5).cycle_count() == 5);
  CHECK(Permutation::transposition(4, 1, 3).cycle_count() == 3);
}

TEST_CASE("composition convention") {
  const Permutation f({1, 2, 0});
  const Permutation g({0, 2, 1});
  const auto fg = f * g;
  for (std::size_t x = 0; x < 3; ++x) CHECK(fg(x) == f(g(x)));
  CHECK((f * f.inverse()).is_identity());
  CHECK((f.inverse() * f).is_identity());
}

TEST_CASE("enumeration and lexicographic rank") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto all = Permutation::all(n);
    CHECK(all.size() == factorial(n));
    for (std::size_t k = 0; k < all.size(); ++k) {
      CHECK(all[k].lex_rank() == k);
      if (k > 0) CHECK(all[k - 1] < all[k]);
    }
  }
}

TEST_CASE("orbit counting agrees with subgroup enumeration") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto all = Permutation::all(n);
    for (const auto& a : all) {
      for (const auto& b : all) {
        const std::vector<Permutation> gens{a, b};
        CHECK(orbit_count(gens) == orbit_count_by_enumeration(gens));
      }
    }
  }
  CHECK(generated_subgroup(std::vector<Permutation>{Permutation::cycle(4)}).size() == 4);
  CHECK(generated_subgroup(std::vector<Permutation>{Permutation::cycle(3), Permutation::transposition(3, 0, 1)})
            .size() == 6);
  CHECK_THROWS(orbit_count(std::vector<Permutation>{}));
  CHECK_THROWS(orbit_count(std::vector<Permutation>{Permutation::identity(2), Permutation::identity(3)}));
}

TEST_CASE("cycle count is a class function") {
  const auto all = Permutation::all(4);
  for (const auto& p : all) {
    for (const auto& h : all) CHECK((h * p * h.inverse()).cycle_count() == p.cycle_count());
  }
}
