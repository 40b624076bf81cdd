#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "convexgeo/element_set.hpp"
#include "convexgeo/errors.hpp"

namespace convexgeo {

/// Default bound on |G| for enumerations over the power set.
inline constexpr std::size_t kDefaultCap = 20;

/// A ground-set member: its name and its dense index.
struct Element {
  std::string name;
  std::size_t index = 0;
};

/// True for nonempty strings of ASCII letters, digits and underscores.
bool is_valid_token(std::string_view token);

/// Interned ground set. Names are kept sorted so that element indices
/// follow name order, which makes every derived ordering deterministic.
class GroundSet {
 public:
  GroundSet() = default;
  /// Duplicates are merged. Throws InputError on an invalid token or when
  /// more than kMaxElements names are given.
  explicit GroundSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }
  Element element(std::size_t index) const { return {name(index), index}; }
  ElementSet all() const { return ElementSet::full(size()); }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws InputError naming the token when it is not a ground element.
  std::size_t index_of(std::string_view name) const;
  ElementSet set_of(std::span<const std::string> names) const;

  /// Member names in index order joined by `separator`.
  std::string format(ElementSet s, std::string_view separator = " ") const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// X -> Y with X, Y nonempty and disjoint.
struct Implication {
  ElementSet premise;
  ElementSet conclusion;

  bool binary() const { return premise.size() == 1; }
  std::size_t size() const { return premise.size() + conclusion.size(); }
  friend bool operator==(const Implication&, const Implication&) = default;
};

/// (premise size, premise lex, conclusion lex).
bool implication_less(const Implication& a, const Implication& b);

using Basis = std::vector<Implication>;

/// Sorts with implication_less and removes exact duplicates.
void normalize(Basis& basis);

/// Forward chaining to the least superset of `seed` respecting every
/// implication.
ElementSet close_under(std::span<const Implication> basis, ElementSet seed);

/// Does `candidate` respect every implication of `basis`?
bool respects(std::span<const Implication> basis, ElementSet candidate);

/// Conclusion contained in the closure of the premise under `basis`.
bool entails(std::span<const Implication> basis, const Implication& imp);

/// Mutual entailment. Both bases must reference the same ground.
bool bases_equivalent(std::span<const Implication> first,
                      std::span<const Implication> second);

/// Strict part of the binary order a >=_phi b iff b in phi({a}).
class BinaryOrder {
 public:
  BinaryOrder() = default;
  explicit BinaryOrder(std::vector<ElementSet> below);

  std::size_t size() const { return below_.size(); }
  /// Elements strictly below `a`.
  ElementSet below(std::size_t a) const { return below_.at(a); }
  /// a > b
  bool greater(std::size_t a, std::size_t b) const {
    return below_.at(a).contains(b);
  }
  /// Members of `s` not strictly below another member of `s`.
  ElementSet maximal(ElementSet s) const;
  /// Downward closed: contains everything below each member.
  bool is_ideal(ElementSet s) const;
  /// All (a, b) with a > b, ordered by a then b.
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;

 private:
  std::vector<ElementSet> below_;
};

/// A finite closure system given by a ground set and an implication list.
///
/// Values are immutable after construction. The closed family and the
/// binary order are computed on first use under a once-only guard, so a
/// system may be shared between threads. Copies share those caches.
class ClosureSystem {
 public:
  ClosureSystem();
  /// Validates that every implication references ground elements only, has
  /// nonempty disjoint sides, and sorts the list. Throws InputError.
  ClosureSystem(GroundSet ground, Basis implications,
                std::size_t cap = kDefaultCap);

  /// Builds a system from a closed family: the family must contain the
  /// ground set and be closed under intersection. The implications are
  /// X -> phi(X) \ X for every non-closed X, so the family size is bounded
  /// by the cap.
  static ClosureSystem from_closed_family(GroundSet ground,
                                          std::span<const ElementSet> family,
                                          std::size_t cap = kDefaultCap);

  const GroundSet& ground() const { return ground_; }
  const Basis& implications() const { return implications_; }
  std::size_t size() const { return ground_.size(); }
  std::size_t cap() const { return cap_; }

  /// Same ground and cap, different implications.
  ClosureSystem with_implications(Basis implications) const;
  /// Same ground and implications, different cap.
  ClosureSystem with_cap(std::size_t cap) const;

  /// Throws InputError if `seed` mentions indices outside the ground set.
  ElementSet closure(ElementSet seed) const;
  bool is_closed(ElementSet s) const;

  /// Every closed set, ordered by size then lex. Throws CapExceeded.
  const std::vector<ElementSet>& closed_sets() const;
  /// Membership in closed_sets() by bit pattern; same cap.
  const std::vector<bool>& closed_table() const;

  /// Throws DomainError if the system is not standard.
  const BinaryOrder& binary_order() const;

  /// phi({i}) \ {i} is closed for every i.
  bool is_standard() const;

  /// Throws CapExceeded when |G| exceeds the cap.
  void require_within_cap(std::string_view operation) const;
  void require_within_cap(std::string_view operation, std::size_t cap) const;

 private:
  struct Cache;

  GroundSet ground_;
  Basis implications_;
  std::size_t cap_ = kDefaultCap;
  std::shared_ptr<Cache> cache_;
};

/// Enumerates all closed sets by testing every subset of G.
std::vector<ElementSet> closed_sets(const ClosureSystem& sys);

struct AntiExchangeWitness {
  ElementSet closed;
  std::size_t x = 0;
  std::size_t y = 0;
};

struct AxiomReport {
  bool zero_closed = false;
  bool standard = false;
  bool anti_exchange = false;
  bool is_convex_geometry = false;
  /// Closed X and x != y with x in phi(X+y), x not in X, y in phi(X+x).
  std::optional<AntiExchangeWitness> witness;
};

/// Checks the axioms by direct quantification over the closed family.
AxiomReport verify_axioms(const ClosureSystem& sys);

/// Throws DomainError unless `sys` is a convex geometry.
void require_convex_geometry(const ClosureSystem& sys, std::string_view operation);

/// Ex(Z) = {x in Z : x not in phi(Z \ {x})}. Throws DomainError if Z is not
/// closed.
ElementSet extreme_points(const ClosureSystem& sys, ElementSet closed);

enum class Provenance { input, canonical, k, d, foe, carousel, order_convex, brute };

std::string_view to_string(Provenance p);

/// A basis with its size metrics.
struct BasisReport {
  Basis implications;
  std::size_t s = 0;
  std::size_t s_left = 0;
  std::size_t s_right = 0;
  std::size_t count = 0;
  Provenance provenance = Provenance::input;
};

/// Normalizes the basis order and fills in the metrics.
BasisReport basis_stats(Basis basis, Provenance provenance = Provenance::input);

}  // namespace convexgeo
