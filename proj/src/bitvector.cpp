#include "sumlab/bitvector.hpp"

#include <algorithm>
#include <bit>

namespace sumlab {

namespace {

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + BitVector::kWordBits - 1) / BitVector::kWordBits;
}

constexpr BitVector::Word low_mask(std::size_t bits) {
  return bits >= BitVector::kWordBits ? ~BitVector::Word{0} : (BitVector::Word{1} << bits) - 1;
}

}  // namespace

BitVector::BitVector(std::size_t size, bool value)
    : words_(words_for(size), value ? ~Word{0} : Word{0}), size_(size) {
  trim();
}

void BitVector::trim() noexcept {
  const std::size_t tail = size_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= low_mask(tail);
}

void BitVector::set_range(std::size_t lo, std::size_t hi) noexcept {
  hi = std::min(hi, size_);
  if (lo >= hi) return;
  std::size_t first = lo / kWordBits;
  std::size_t last = (hi - 1) / kWordBits;
  const Word head = ~low_mask(lo % kWordBits);
  const Word tail = low_mask((hi - 1) % kWordBits + 1);
  if (first == last) {
    words_[first] |= head & tail;
    return;
  }
  words_[first] |= head;
  for (std::size_t w = first + 1; w < last; ++w) words_[w] = ~Word{0};
  words_[last] |= tail;
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitVector::count_range(std::size_t lo, std::size_t hi) const noexcept {
  hi = std::min(hi, size_);
  if (lo >= hi) return 0;
  std::size_t first = lo / kWordBits;
  std::size_t last = (hi - 1) / kWordBits;
  const Word head = ~low_mask(lo % kWordBits);
  const Word tail = low_mask((hi - 1) % kWordBits + 1);
  if (first == last) return static_cast<std::size_t>(std::popcount(words_[first] & head & tail));
  std::size_t total = static_cast<std::size_t>(std::popcount(words_[first] & head));
  for (std::size_t w = first + 1; w < last; ++w) total += static_cast<std::size_t>(std::popcount(words_[w]));
  total += static_cast<std::size_t>(std::popcount(words_[last] & tail));
  return total;
}

bool BitVector::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t BitVector::find_next(std::size_t from) const noexcept {
  if (from >= size_) return size_;
  std::size_t w = from / kWordBits;
  Word cur = words_[w] & ~low_mask(from % kWordBits);
  while (true) {
    if (cur != 0) return std::min(size_, w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur)));
    if (++w >= words_.size()) return size_;
    cur = words_[w];
  }
}

std::size_t BitVector::find_next_clear(std::size_t from) const noexcept {
  if (from >= size_) return size_;
  std::size_t w = from / kWordBits;
  Word cur = ~words_[w] & ~low_mask(from % kWordBits);
  while (true) {
    if (cur != 0) return std::min(size_, w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur)));
    if (++w >= words_.size()) return size_;
    cur = ~words_[w];
  }
}

std::vector<std::pair<std::size_t, std::size_t>> BitVector::runs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t pos = find_next(0);
  while (pos < size_) {
    std::size_t end = find_next_clear(pos);
    out.emplace_back(pos, end - pos);
    pos = find_next(end);
  }
  return out;
}

BitVector& BitVector::operator|=(const BitVector& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator^=(const BitVector& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::and_not(const BitVector& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

void BitVector::flip() noexcept {
  for (Word& w : words_) w = ~w;
  trim();
}

BitVector BitVector::shifted(std::int64_t delta) const {
  BitVector out(size_);
  out.or_shifted(*this, delta);
  return out;
}

void BitVector::or_shifted(const BitVector& src, std::int64_t delta) noexcept {
  const std::size_t n = words_.size();
  if (n == 0) return;
  if (delta == 0) {
    *this |= src;
    return;
  }
  const std::size_t dist = static_cast<std::size_t>(delta < 0 ? -delta : delta);
  if (dist >= size_) return;
  const std::size_t ws = dist / kWordBits;
  const unsigned bs = static_cast<unsigned>(dist % kWordBits);
  const auto& s = src.words_;
  if (delta > 0) {
    for (std::size_t j = n; j-- > ws;) {
      Word v = s[j - ws] << bs;
      if (bs != 0 && j > ws) v |= s[j - ws - 1] >> (kWordBits - bs);
      words_[j] |= v;
    }
  } else {
    for (std::size_t j = 0; j + ws < n; ++j) {
      Word v = s[j + ws] >> bs;
      if (bs != 0 && j + ws + 1 < n) v |= s[j + ws + 1] << (kWordBits - bs);
      words_[j] |= v;
    }
  }
  trim();
}

bool BitVector::is_subset_of(const BitVector& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

PrefixCounter::PrefixCounter(const BitVector& bits) : bits_(&bits) {
  auto words = bits.words();
  before_word_.resize(words.size() + 1);
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    before_word_[i] = acc;
    acc += std::popcount(words[i]);
  }
  before_word_[words.size()] = acc;
}

std::int64_t PrefixCounter::prefix(std::size_t end) const noexcept {
  end = std::min(end, bits_->size());
  const std::size_t w = end / BitVector::kWordBits;
  const std::size_t r = end % BitVector::kWordBits;
  std::int64_t c = before_word_[w];
  if (r != 0) c += std::popcount(bits_->words()[w] & low_mask(r));
  return c;
}

std::int64_t PrefixCounter::count(std::size_t lo, std::size_t hi) const noexcept {
  if (lo >= hi) return 0;
  return prefix(hi) - prefix(lo);
}

}  // namespace sumlab
