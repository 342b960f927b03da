#pragma once

// Packed bit vector with the word-level kernels used by the set algebra:
// shifted OR, range population counts and run extraction.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace sumlab {

class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size, bool value = false);

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  /// Sets every bit in [lo, hi).
  void set_range(std::size_t lo, std::size_t hi) noexcept;

  [[nodiscard]] std::size_t count() const noexcept;
  /// Population count of [lo, hi).
  [[nodiscard]] std::size_t count_range(std::size_t lo, std::size_t hi) const noexcept;
  [[nodiscard]] bool any() const noexcept;
  [[nodiscard]] bool none() const noexcept { return !any(); }

  /// Index of the first set bit at or after `from`, or size() if none.
  [[nodiscard]] std::size_t find_next(std::size_t from) const noexcept;
  /// Index of the first clear bit at or after `from`, or size() if none.
  [[nodiscard]] std::size_t find_next_clear(std::size_t from) const noexcept;

  /// Maximal runs of set bits as (start, length) pairs in increasing order.
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> runs() const;

  BitVector& operator|=(const BitVector& other) noexcept;
  BitVector& operator&=(const BitVector& other) noexcept;
  BitVector& operator^=(const BitVector& other) noexcept;
  BitVector& and_not(const BitVector& other) noexcept;
  void flip() noexcept;

  /// result[i + delta] = this[i]; bits moved outside [0, size) are dropped.
  [[nodiscard]] BitVector shifted(std::int64_t delta) const;
  /// this[i + delta] |= src[i], same dropping rule. Sizes must agree.
  void or_shifted(const BitVector& src, std::int64_t delta) noexcept;

  [[nodiscard]] bool is_subset_of(const BitVector& other) const noexcept;

  [[nodiscard]] std::span<const Word> words() const noexcept { return words_; }

  friend bool operator==(const BitVector& a, const BitVector& b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  void trim() noexcept;

  std::vector<Word> words_;
  std::size_t size_ = 0;
};

inline BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
inline BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

// O(1) range counts after one linear pass.
class PrefixCounter {
 public:
  explicit PrefixCounter(const BitVector& bits);
  /// Population count of [lo, hi).
  [[nodiscard]] std::int64_t count(std::size_t lo, std::size_t hi) const noexcept;
  [[nodiscard]] std::int64_t prefix(std::size_t end) const noexcept;

 private:
  const BitVector* bits_;
  std::vector<std::int64_t> before_word_;
};

}  // namespace sumlab
