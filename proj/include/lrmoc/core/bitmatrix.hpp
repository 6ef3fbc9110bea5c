#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lrmoc {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for_bits(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

inline bool get_bit(std::span<const Word> words, std::size_t k) {
  return (words[k / kWordBits] >> (k % kWordBits)) & Word{1};
}

inline void set_bit(std::span<Word> words, std::size_t k, bool v) {
  const Word mask = Word{1} << (k % kWordBits);
  if (v) {
    words[k / kWordBits] |= mask;
  } else {
    words[k / kWordBits] &= ~mask;
  }
}

inline void flip_bit(std::span<Word> words, std::size_t k) {
  words[k / kWordBits] ^= Word{1} << (k % kWordBits);
}

/// Dense row-major GF(2) matrix, rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for_bits(cols)), data_(rows * stride_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const { return get_bit(row(r), c); }
  void set(std::size_t r, std::size_t c, bool v) { set_bit(row(r), c, v); }

  std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
  std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// Rank over GF(2). Works on a private copy; the argument is untouched.
std::size_t gf2_rank(const BitMatrix& matrix);

}  // namespace lrmoc
