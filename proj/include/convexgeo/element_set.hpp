#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace convexgeo {

/// Largest ground set representable by an ElementSet.
inline constexpr std::size_t kMaxElements = 64;

/// A subset of a ground set {0, ..., n-1}, n <= 64, stored as a bit vector.
class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr std::size_t operator*() const {
      return static_cast<std::size_t>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;

  static constexpr ElementSet from_bits(std::uint64_t bits) {
    ElementSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr ElementSet singleton(std::size_t i) {
    return from_bits(std::uint64_t{1} << i);
  }
  /// {0, ..., n-1}
  static constexpr ElementSet full(std::size_t n) {
    return from_bits(n >= kMaxElements ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

  /// Index of the smallest member; undefined on the empty set.
  constexpr std::size_t lowest() const {
    return static_cast<std::size_t>(std::countr_zero(bits_));
  }
  /// Index of the largest member; undefined on the empty set.
  constexpr std::size_t highest() const {
    return 63 - static_cast<std::size_t>(std::countl_zero(bits_));
  }

  constexpr bool subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool proper_subset_of(ElementSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr ElementSet with(std::size_t i) const {
    return from_bits(bits_ | (std::uint64_t{1} << i));
  }
  constexpr ElementSet without(std::size_t i) const {
    return from_bits(bits_ & ~(std::uint64_t{1} << i));
  }

  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return a |= b;
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return a &= b;
  }
  /// Set difference.
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return a -= b;
  }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending index sequences of two sets.
bool lex_less(ElementSet a, ElementSet b);

/// Cardinality first, then lexicographic. The enumeration order used for
/// families of sets.
bool size_lex_less(ElementSet a, ElementSet b);

struct ElementSetHash {
  std::size_t operator()(ElementSet s) const noexcept {
    std::uint64_t h = s.bits();
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
  }
};

/// Calls f on every subset of s, starting from the empty set and ending with
/// s itself (increasing bit patterns).
template <typename F>
void for_each_subset(ElementSet s, F&& f) {
  const std::uint64_t mask = s.bits();
  std::uint64_t sub = 0;
  while (true) {
    f(ElementSet::from_bits(sub));
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

/// Calls f on every subset of s with exactly k elements, in lexicographic
/// order. Stops early when f returns false.
template <typename F>
bool for_each_subset_of_size(ElementSet s, std::size_t k, F&& f) {
  const std::size_t n = s.size();
  if (k > n) return true;
  std::size_t members[kMaxElements];
  std::size_t idx = 0;
  for (std::size_t e : s) members[idx++] = e;
  std::size_t pick[kMaxElements];
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    ElementSet sub;
    for (std::size_t i = 0; i < k; ++i) sub.insert(members[pick[i]]);
    if (!f(sub)) return false;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

/// Subsets of s in size-then-lex order; stops early when f returns false.
template <typename F>
bool for_each_subset_by_size(ElementSet s, F&& f) {
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (!for_each_subset_of_size(s, k, f)) return false;
  }
  return true;
}

}  // namespace convexgeo
