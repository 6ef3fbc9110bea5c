#include "lrmoc/core/bitmatrix.hpp"

#include <algorithm>

namespace lrmoc {

std::size_t gf2_rank(const BitMatrix& matrix) {
  BitMatrix m = matrix;
  const std::size_t rows = m.rows();
  const std::size_t stride = m.stride();
  std::size_t rank = 0;

  for (std::size_t w = 0; w < stride && rank < rows; ++w) {
    // Pivot on the lowest set bit of the first remaining row with a nonzero
    // word w; stop once word w is cleared in every remaining row.
    while (rank < rows) {
      std::size_t pivot = rows;
      for (std::size_t r = rank; r < rows; ++r) {
        if (m.row(r)[w] != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot == rows) break;
      if (pivot != rank) {
        auto a = m.row(pivot);
        auto b = m.row(rank);
        std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(w), a.end(),
                         b.begin() + static_cast<std::ptrdiff_t>(w));
      }
      auto prow = m.row(rank);
      const Word lowest = prow[w] & (~prow[w] + 1);
      for (std::size_t r = rank + 1; r < rows; ++r) {
        auto row = m.row(r);
        if (row[w] & lowest) {
          for (std::size_t k = w; k < stride; ++k) row[k] ^= prow[k];
        }
      }
      ++rank;
    }
  }
  return rank;
}

}  // namespace lrmoc
