#pragma once

#include <utility>
#include <vector>

#include "convexgeo/canonical.hpp"
#include "convexgeo/core.hpp"

namespace convexgeo {

/// Containment-minimal >=_phi order ideals C' inside a critical set with
/// phi(C') = phi(C), reduced to their maximal elements. Lexicographic.
/// A binary critical {x} yields {x}.
std::vector<ElementSet> minimal_order_generators(const ClosureSystem& sys,
                                                 const CriticalRecord& record);

/// Canonical basis with each premise replaced by its minimal order generator
/// and each conclusion by its >=_phi-maximal elements. Throws DomainError
/// when some essential set has more than one minimal order generator.
BasisReport k_basis(const ClosureSystem& sys);

/// bDa: a occurs in the premise of a non-binary D-basis implication A -> b.
struct DRelation {
  /// (b, a) pairs, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  /// reach[b] = every a with (b, a) in the transitive closure.
  std::vector<ElementSet> reach;

  bool acyclic() const;
};

DRelation make_d_relation(std::size_t ground_size, std::span<const Implication> basis);

struct DBasisResult {
  BasisReport basis;
  DRelation relation;
};

/// Unit-conclusion D-basis: the binary part x -> y for every strict pair of
/// the binary order, plus order-minimal covers A -> b obtained by refining
/// the canonical basis.
DBasisResult d_basis(const ClosureSystem& sys);

struct DCycleReport {
  bool has_cycle = false;
  /// x0 D x1 D ... D x0, shortest over all start points; first element
  /// repeated at the end.
  std::vector<std::size_t> cycle;
};

DCycleReport has_d_cycles(const ClosureSystem& sys);
DCycleReport find_d_cycle(const DRelation& relation);

/// The FOE basis of a D-geometry: F-basis binary part x -> Ex(phi({x}) \ {x})
/// and K-basis premises with E-pruned conclusions. Throws DomainError if the
/// system is not a convex geometry or has D-cycles.
BasisReport sigma_foe(const ClosureSystem& sys);

}  // namespace convexgeo
