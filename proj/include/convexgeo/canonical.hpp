#pragma once

#include <optional>
#include <vector>

#include "convexgeo/core.hpp"

namespace convexgeo {

/// Non-closed Q such that Q & X is closed for every closed X not containing
/// Q. Ordered by size then lex. Throws CapExceeded.
std::vector<ElementSet> quasi_closed_sets(const ClosureSystem& sys);

/// The saturation operator: least closed or quasi-closed superset.
///
/// Holds the closed and quasi-closed families of one system so repeated
/// queries do not re-enumerate the power set.
class Saturation {
 public:
  explicit Saturation(const ClosureSystem& sys);

  const ClosureSystem& system() const { return sys_; }
  const std::vector<ElementSet>& quasi_closed() const { return quasi_; }
  bool is_quasi_closed(ElementSet s) const { return quasi_table_[s.bits()]; }
  bool is_saturated(ElementSet s) const {
    return quasi_table_[s.bits()] || sys_.closed_table()[s.bits()];
  }
  ElementSet operator()(ElementSet y) const;

 private:
  ClosureSystem sys_;
  std::vector<ElementSet> quasi_;
  std::vector<bool> quasi_table_;
};

ElementSet saturation(const ClosureSystem& sys, ElementSet y);

struct CriticalRecord {
  ElementSet critical;
  /// phi(critical)
  ElementSet essential;
  /// Smallest |U| with U inside the critical set and phi(U) = essential.
  std::size_t k = 0;
  /// Every generator of size k, lexicographic.
  std::vector<ElementSet> minimal_generators;

  bool binary() const { return critical.size() == 1; }
};

/// Critical sets ordered by (size, lex), each with its minimum generators.
std::vector<CriticalRecord> critical_sets(const ClosureSystem& sys);

/// {C -> phi(C) \ C : C critical}.
BasisReport canonical_basis(const ClosureSystem& sys);

struct OptimumParameter {
  ElementSet critical;
  std::size_t k = 0;
  /// Binary criticals {x} only: min |Y| with phi(Y) = phi({x}) \ {x}.
  std::optional<std::size_t> b;
  /// The lex-least Y realizing b.
  std::optional<ElementSet> b_witness;
};

std::vector<OptimumParameter> optimum_parameters(const ClosureSystem& sys);

/// Sum of the fixed premise sizes and fixed binary conclusion sizes; a lower
/// bound on the size of any basis of the system.
std::size_t optimum_lower_bound(std::span<const OptimumParameter> params);

}  // namespace convexgeo
