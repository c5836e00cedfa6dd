#ifndef POSETCUT_DETAIL_BIT_MATRIX_HPP
#define POSETCUT_DETAIL_BIT_MATRIX_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace posetcut::detail {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

// Square n x n bit matrix stored row-major, each row padded to whole words.
// Padding bits are always zero.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {}

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool test(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c) {
    bits_[r * words_ + c / kWordBits] |= Word{1} << (c % kWordBits);
  }
  void reset(std::size_t r, std::size_t c) {
    bits_[r * words_ + c / kWordBits] &= ~(Word{1} << (c % kWordBits));
  }

  std::span<const Word> row(std::size_t r) const {
    return {bits_.data() + r * words_, words_};
  }
  std::span<Word> row(std::size_t r) {
    return {bits_.data() + r * words_, words_};
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

inline std::size_t popcount(std::span<const Word> a) {
  std::size_t total = 0;
  for (Word w : a) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

inline std::size_t popcount_and(std::span<const Word> a,
                                std::span<const Word> b) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  }
  return total;
}

inline bool intersects(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

// Index of the first bit set in `a & ~b`, or `npos` when a is a subset of b.
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);
inline std::size_t first_outside(std::span<const Word> a,
                                 std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (Word d = a[i] & ~b[i]) {
      return i * kWordBits + static_cast<std::size_t>(std::countr_zero(d));
    }
  }
  return npos;
}

// Index of the first bit set in both rows, or `npos`.
inline std::size_t first_common(std::span<const Word> a,
                                std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (Word d = a[i] & b[i]) {
      return i * kWordBits + static_cast<std::size_t>(std::countr_zero(d));
    }
  }
  return npos;
}

// Calls fn(index) for every set bit, in increasing order.
template <typename Fn>
void for_each_bit(std::span<const Word> a, Fn&& fn) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    Word w = a[i];
    while (w) {
      fn(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
}

}  // namespace posetcut::detail

#endif  // POSETCUT_DETAIL_BIT_MATRIX_HPP
