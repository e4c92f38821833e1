#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace toughham {

/// Largest graph order supported by the bitset representation.
inline constexpr int kMaxOrder = 256;

/// Fixed-capacity set of vertex ids in [0, kMaxOrder).
///
/// Four 64-bit words, 32-byte aligned so a whole set fits one AVX2 register.
/// Every adjacency row of a Graph is a VertexSet, which makes neighbourhood
/// intersection and union a handful of word operations.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;
  static constexpr int kWords = kMaxOrder / kWordBits;

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> members) {
    for (int v : members) insert(v);
  }

  /// {0, ..., n-1}
  static VertexSet range(int n) {
    VertexSet s;
    for (int w = 0; w < kWords; ++w) {
      int lo = w * kWordBits;
      if (n >= lo + kWordBits) {
        s.words_[w] = ~Word{0};
      } else if (n > lo) {
        s.words_[w] = (Word{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  static VertexSet from_members(const std::vector<int>& members) {
    VertexSet s;
    for (int v : members) s.insert(v);
    return s;
  }

  void insert(int v) { words_[v >> 6] |= Word{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(Word{1} << (v & 63)); }
  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

  int size() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    return (words_[0] | words_[1] | words_[2] | words_[3]) == 0;
  }

  /// Smallest member, or -1 when empty.
  int first() const {
    for (int w = 0; w < kWords; ++w) {
      if (words_[w] != 0) return w * kWordBits + std::countr_zero(words_[w]);
    }
    return -1;
  }

  /// Smallest member strictly greater than v, or -1.
  int next(int v) const {
    ++v;
    if (v >= kMaxOrder) return -1;
    int w = v >> 6;
    Word cur = words_[w] & (~Word{0} << (v & 63));
    while (true) {
      if (cur != 0) return w * kWordBits + std::countr_zero(cur);
      if (++w == kWords) return -1;
      cur = words_[w];
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (int w = 0; w < kWords; ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        fn(w * kWordBits + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  bool intersects(const VertexSet& o) const {
    Word acc = 0;
    for (int w = 0; w < kWords; ++w) acc |= words_[w] & o.words_[w];
    return acc != 0;
  }
  bool is_subset_of(const VertexSet& o) const {
    Word acc = 0;
    for (int w = 0; w < kWords; ++w) acc |= words_[w] & ~o.words_[w];
    return acc == 0;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic order on the ascending member lists ({0,1,4} < {0,2,3}).
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    VertexSet diff = a ^ b;
    int v = diff.first();
    if (v < 0) return false;
    // Members below v are shared. A list that runs out first sorts first.
    VertexSet upto = VertexSet::range(v + 1);
    if (a.contains(v)) return !(b - upto).empty();
    return (a - upto).empty();
  }

  const std::array<Word, kWords>& words() const { return words_; }
  std::array<Word, kWords>& words() { return words_; }

 private:
  alignas(32) std::array<Word, kWords> words_{};
};

}  // namespace toughham
