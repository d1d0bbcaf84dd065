#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sumfree {

/// Fixed-length dynamic bit-vector with word-parallel bulk operations.
///
/// Bits past `size()` in the last word are kept zero; every mutating
/// operation restores that invariant so popcount and equality stay exact.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t bits) : bits_(bits), words_(word_count(bits), 0) {}

  static std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

  std::size_t size() const noexcept { return bits_; }
  const std::vector<Word>& words() const noexcept { return words_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  void set_all() {
    for (auto& w : words_) w = ~Word{0};
    trim();
  }

  /// Sets bits [lo, hi] inclusive; requires lo <= hi < size().
  void set_range(std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i <= hi;) {
      const std::size_t offset = i % kWordBits;
      const std::size_t span = std::min(kWordBits - offset, hi - i + 1);
      const Word mask = span == kWordBits ? ~Word{0} : ((Word{1} << span) - 1) << offset;
      words_[i / kWordBits] |= mask;
      i += span;
    }
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  bool all() const { return count() == bits_; }

  bool intersects(const BitVector& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const BitVector& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  BitVector& operator|=(const BitVector& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  BitVector& operator&=(const BitVector& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitVector& and_not(const BitVector& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  void flip() {
    for (auto& w : words_) w = ~w;
    trim();
  }

  /// this |= (src << shift), truncated to size(). `src` may be of any length.
  void or_shifted_left(const BitVector& src, std::size_t shift) {
    if (shift >= bits_) return;
    const std::size_t word_shift = shift / kWordBits;
    const std::size_t bit_shift = shift % kWordBits;
    const std::size_t n = words_.size();
    const std::size_t m = src.words_.size();
    for (std::size_t j = 0; j < m && j + word_shift < n; ++j) {
      const Word w = src.words_[j];
      words_[j + word_shift] |= w << bit_shift;
      if (bit_shift && j + word_shift + 1 < n) words_[j + word_shift + 1] |= w >> (kWordBits - bit_shift);
    }
    trim();
  }

  /// this |= (src >> shift), i.e. bit i of the result takes bit i+shift of src.
  void or_shifted_right(const BitVector& src, std::size_t shift) {
    if (shift >= src.bits_) return;
    const std::size_t word_shift = shift / kWordBits;
    const std::size_t bit_shift = shift % kWordBits;
    const std::size_t n = words_.size();
    const std::size_t m = src.words_.size();
    for (std::size_t j = word_shift; j < m; ++j) {
      const std::size_t dst = j - word_shift;
      const Word w = src.words_[j];
      if (dst < n) words_[dst] |= w >> bit_shift;
      if (bit_shift && dst >= 1 && dst - 1 < n) words_[dst - 1] |= w << (kWordBits - bit_shift);
    }
    trim();
  }

  /// Calls f(i) for every set bit in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        const int b = std::countr_zero(w);
        f(wi * kWordBits + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

  /// Index of the lowest set bit, or size() when empty.
  std::size_t find_first() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      if (words_[wi]) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[wi]));
    return bits_;
  }

  /// Lexicographic order on bit-strings read from index 0 upward
  /// (a 0 at the first differing position sorts first). Sizes must match.
  bool lex_less(const BitVector& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const Word diff = words_[i] ^ o.words_[i];
      if (diff) return ((words_[i] >> std::countr_zero(diff)) & 1u) == 0;
    }
    return false;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  void trim() {
    const std::size_t tail = bits_ % kWordBits;
    if (tail && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
  }

  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

}  // namespace sumfree
