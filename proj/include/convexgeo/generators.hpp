#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "convexgeo/core.hpp"
#include "convexgeo/poset.hpp"

namespace convexgeo {

using Rational = boost::multiprecision::cpp_rational;

struct PlanarPoint {
  std::string name;
  Rational x;
  Rational y;
};

/// Largest point set accepted by affine_2d.
inline constexpr std::size_t kAffineCap = 16;

/// Lines `name x y`, coordinates integers or `p/q`.
std::vector<PlanarPoint> parse_points(std::string_view text);

/// Convex sets relative to a planar point set: phi(S) holds every point in
/// the convex hull of S. Predicates are exact. The returned system carries
/// the canonical basis of the geometry. Throws InputError on duplicate names
/// or coincident points.
ClosureSystem affine_2d(std::span<const PlanarPoint> points,
                        std::size_t cap = kAffineCap);

/// Order-convex subsets: xy -> {z : x < z < y} for every x < y with a
/// nonempty open interval.
ClosureSystem order_convex_basis(const Poset& poset);

/// A validated meet-semilattice operation.
class MeetTable {
 public:
  /// `entries` are triples (a, b, c) meaning a ^ b = c; the symmetric entry
  /// is implied and a ^ a = a need not be listed. Throws InputError on a
  /// missing pair, conflicting entries, or a failed associativity check.
  static MeetTable from_entries(std::span<const std::array<std::string, 3>> entries);

  const GroundSet& ground() const { return ground_; }
  std::size_t meet(std::size_t a, std::size_t b) const { return table_.at(a).at(b); }

 private:
  GroundSet ground_;
  std::vector<std::vector<std::size_t>> table_;
};

/// Lines `a ^ b = c`.
MeetTable parse_meet_table(std::string_view text);

/// Subsemilattices: ab -> c whenever a ^ b = c is neither a nor b.
ClosureSystem subsemilattice_basis(const MeetTable& meets);

/// Suborders of a poset. Ground elements are the strict pairs (x, y),
/// named `x_y`; implications (x,y)(y,z) -> (x,z).
ClosureSystem suborder_basis(const Poset& poset);

struct CqWitness {
  /// Index into the checked basis.
  std::size_t implication = 0;
  std::size_t conclusion_element = 0;
  ElementSet component;
};

struct CqReport {
  bool holds = true;
  /// Components with more than one element, ordered by least element.
  std::vector<ElementSet> components;
  std::optional<CqWitness> witness;
};

/// Component-quadratic check of a specific basis: every premise holds at
/// most one element of the component of each of its conclusion elements.
/// Components are the strongly connected parts of premise-to-conclusion
/// reachability.
CqReport cq_check(std::span<const Implication> basis, std::size_t ground_size);

}  // namespace convexgeo
