#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "convexgeo/core.hpp"

namespace convexgeo {

/// A finite strict partial order on named elements.
class Poset {
 public:
  using NamePair = std::pair<std::string, std::string>;

  Poset() = default;

  /// `less` lists pairs (a, b) meaning a < b; they may be covers or any
  /// strict pairs. The transitive closure is taken. Elements not mentioned in
  /// any pair may be listed in `elements`. Throws InputError on a cycle.
  static Poset from_pairs(std::vector<std::string> elements,
                          std::span<const NamePair> less);

  /// Index-based variant; `above[i]` is any relation generating the order.
  Poset(GroundSet ground, std::vector<ElementSet> above);

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }

  bool less(std::size_t a, std::size_t b) const { return above_.at(a).contains(b); }
  /// Elements strictly above `a`.
  ElementSet above(std::size_t a) const { return above_.at(a); }
  /// Elements strictly below `a`.
  ElementSet below(std::size_t a) const { return below_.at(a); }
  /// {z : a < z < b}; empty unless a < b.
  ElementSet open_interval(std::size_t a, std::size_t b) const;
  bool covers(std::size_t upper, std::size_t lower) const;

  /// (a, b) with a < b, by a then b.
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;
  /// (a, b) with b covering a.
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

  /// Connected components of the cover graph restricted to `subset`,
  /// ordered by their least element.
  std::vector<ElementSet> components(ElementSet subset) const;

 private:
  GroundSet ground_;
  std::vector<ElementSet> above_;
  std::vector<ElementSet> below_;
};

/// Lines `a < b`; a line holding a single name declares an element. `#`
/// starts a comment.
Poset parse_poset(std::string_view text);

}  // namespace convexgeo
