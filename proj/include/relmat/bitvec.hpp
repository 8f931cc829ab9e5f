#pragma once

/**
 * Word-packed dynamic bit vector, sized at construction. Unused high bits of
 * the last word are kept zero, so whole-word operations stay exact.
 */

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace relmat {

class BitVec {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVec() = default;
  explicit BitVec(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  static BitVec with_bits(std::size_t n, std::initializer_list<std::size_t> bits) {
    BitVec v(n);
    for (std::size_t b : bits) v.set(b);
    return v;
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= word_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(word_t{1} << (i & 63)); }
  void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

  bool any() const {
    for (word_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (word_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  BitVec& operator|=(const BitVec& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  BitVec& operator&=(const BitVec& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference: clears every bit that is set in `o`.
  BitVec& subtract(const BitVec& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  BitVec complement() const {
    BitVec r(*this);
    for (word_t& w : r.words_) w = ~w;
    r.mask_tail();
    return r;
  }

  bool subset_of(const BitVec& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const BitVec& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  std::size_t find_first() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      if (words_[wi]) return wi * 64 + static_cast<std::size_t>(std::countr_zero(words_[wi]));
    return npos;
  }

  /// First set position strictly after `prev`, or npos.
  std::size_t find_next(std::size_t prev) const {
    if (++prev >= size_) return npos;
    std::size_t wi = prev >> 6;
    word_t w = words_[wi] & (~word_t{0} << (prev & 63));
    while (true) {
      if (w) return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return npos;
      w = words_[wi];
    }
  }

  std::vector<std::size_t> positions() const {
    std::vector<std::size_t> ps;
    for (std::size_t i = find_first(); i != npos; i = find_next(i)) ps.push_back(i);
    return ps;
  }

  /// Little-endian +1 (bit 0 is least significant). Returns false when the
  /// value wraps back to zero.
  bool increment() {
    if (size_ == 0) return false;
    std::size_t i = 0;
    for (; i < words_.size(); ++i)
      if (++words_[i] != 0) break;
    const std::size_t tail = size_ & 63;
    if (tail != 0) {
      const word_t mask = (word_t{1} << tail) - 1;
      if (words_.back() & ~mask) {
        words_.back() &= mask;
        return false;
      }
    } else if (i == words_.size()) {
      return false;
    }
    return true;
  }

  bool operator==(const BitVec&) const = default;

  /// Numeric order of the vector read as an unsigned integer.
  std::strong_ordering operator<=>(const BitVec& o) const {
    if (auto c = size_ <=> o.size_; c != 0) return c;
    for (std::size_t i = words_.size(); i-- > 0;)
      if (auto c = words_[i] <=> o.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ size_;
    for (word_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

private:
  using word_t = std::uint64_t;

  void mask_tail() {
    const std::size_t tail = size_ & 63;
    if (tail != 0) words_.back() &= (word_t{1} << tail) - 1;
  }

  std::size_t size_ = 0;
  std::vector<word_t> words_;
};

inline BitVec operator|(BitVec a, const BitVec& b) {
  a |= b;
  return a;
}

inline BitVec operator&(BitVec a, const BitVec& b) {
  a &= b;
  return a;
}

}  // namespace relmat

template <>
struct std::hash<relmat::BitVec> {
  std::size_t operator()(const relmat::BitVec& v) const { return v.hash(); }
};
