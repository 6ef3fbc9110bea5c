#include "doctest.h"

#include <vector>

#include "lrmoc/core/bitmatrix.hpp"
#include "lrmoc/core/rng.hpp"

using namespace lrmoc;

namespace {

// Textbook elimination over {0,1} integers, one entry at a time.
std::size_t naive_rank(std::vector<std::vector<int>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != rank && a[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) a[r][k] = (a[r][k] + a[rank][k]) % 2;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("gf2_rank of identity and zero matrices") {
  BitMatrix id(4, 4);
  for (std::size_t k = 0; k < 4; ++k) id.set(k, k, true);
  CHECK(gf2_rank(id) == 4);
  CHECK(gf2_rank(BitMatrix(5, 7)) == 0);
  CHECK(gf2_rank(BitMatrix(0, 3)) == 0);
}

TEST_CASE("gf2_rank leaves its argument untouched") {
  BitMatrix m(3, 3);
  m.set(0, 0, true);
  m.set(1, 0, true);
  m.set(2, 2, true);
  const BitMatrix copy = m;
  CHECK(gf2_rank(m) == 2);
  CHECK(m == copy);
}

TEST_CASE("gf2_rank matches naive elimination on random matrices") {
  auto rng = derive_stream(11, 0);
  const std::size_t shapes[][2] = {{20, 40}, {40, 20}, {70, 130}, {128, 128}, {3, 200}};
  for (const auto& shape : shapes) {
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t rows = shape[0];
      const std::size_t cols = shape[1];
      // Vary density so low-rank cases appear.
      const double density = 0.05 + 0.9 * uniform01(rng);
      BitMatrix m(rows, cols);
      std::vector<std::vector<int>> a(rows, std::vector<int>(cols, 0));
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          const bool b = uniform01(rng) < density;
          m.set(r, c, b);
          a[r][c] = b;
        }
      }
      CHECK(gf2_rank(m) == naive_rank(a));
    }
  }
}

TEST_CASE("gf2_rank of duplicated rows") {
  BitMatrix m(6, 70);
  for (std::size_t r = 0; r < 6; ++r) {
    m.set(r, 69, true);
    m.set(r, r % 3, true);
  }
  CHECK(gf2_rank(m) == 3);
}
