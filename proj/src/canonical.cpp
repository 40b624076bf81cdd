#include "convexgeo/canonical.hpp"

#include <algorithm>
#include <map>

namespace convexgeo {

Saturation::Saturation(const ClosureSystem& sys) : sys_(sys) {
  sys.require_within_cap("quasi-closed enumeration");
  const auto& family = sys.closed_sets();
  const auto& closed = sys.closed_table();
  const std::uint64_t count = std::uint64_t{1} << sys.size();
  quasi_table_.assign(count, false);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    if (closed[bits]) continue;
    const ElementSet q = ElementSet::from_bits(bits);
    const bool quasi = std::all_of(family.begin(), family.end(), [&](ElementSet x) {
      return q.subset_of(x) || closed[(q & x).bits()];
    });
    if (quasi) {
      quasi_table_[bits] = true;
      quasi_.push_back(q);
    }
  }
  std::sort(quasi_.begin(), quasi_.end(), size_lex_less);
}

ElementSet Saturation::operator()(ElementSet y) const {
  if (!y.subset_of(sys_.ground().all())) {
    throw InputError("saturation argument contains elements outside the ground set");
  }
  // The union of both families is closed under intersection, so its least
  // member above y is the intersection of all members above y.
  ElementSet least = sys_.ground().all();
  for (ElementSet x : sys_.closed_sets()) {
    if (y.subset_of(x)) least &= x;
  }
  for (ElementSet q : quasi_) {
    if (y.subset_of(q)) least &= q;
  }
  return least;
}

std::vector<ElementSet> quasi_closed_sets(const ClosureSystem& sys) {
  return Saturation(sys).quasi_closed();
}

ElementSet saturation(const ClosureSystem& sys, ElementSet y) {
  return Saturation(sys)(y);
}

std::vector<CriticalRecord> critical_sets(const ClosureSystem& sys) {
  const Saturation sat(sys);
  const auto& quasi = sat.quasi_closed();
  std::vector<ElementSet> closures;
  closures.reserve(quasi.size());
  for (ElementSet q : quasi) closures.push_back(sys.closure(q));

  std::vector<CriticalRecord> records;
  for (std::size_t i = 0; i < quasi.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < quasi.size() && minimal; ++j) {
      if (j != i && closures[j] == closures[i] && quasi[j].proper_subset_of(quasi[i])) {
        minimal = false;
      }
    }
    if (!minimal) continue;
    CriticalRecord rec;
    rec.critical = quasi[i];
    rec.essential = closures[i];
    for (std::size_t k = 1; k <= rec.critical.size() && rec.minimal_generators.empty(); ++k) {
      for_each_subset_of_size(rec.critical, k, [&](ElementSet u) {
        if (sys.closure(u) == rec.essential) rec.minimal_generators.push_back(u);
        return true;
      });
      if (!rec.minimal_generators.empty()) rec.k = k;
    }
    records.push_back(std::move(rec));
  }
  return records;
}

BasisReport canonical_basis(const ClosureSystem& sys) {
  Basis basis;
  for (const auto& rec : critical_sets(sys)) {
    basis.push_back({rec.critical, rec.essential - rec.critical});
  }
  return basis_stats(std::move(basis), Provenance::canonical);
}

std::vector<OptimumParameter> optimum_parameters(const ClosureSystem& sys) {
  std::vector<OptimumParameter> params;
  for (const auto& rec : critical_sets(sys)) {
    OptimumParameter p;
    p.critical = rec.critical;
    p.k = rec.k;
    if (rec.binary()) {
      const ElementSet target = rec.essential - rec.critical;
      for_each_subset_by_size(target, [&](ElementSet y) {
        if (sys.closure(y) != target) return true;
        p.b = y.size();
        p.b_witness = y;
        return false;
      });
    }
    params.push_back(p);
  }
  return params;
}

std::size_t optimum_lower_bound(std::span<const OptimumParameter> params) {
  std::size_t total = 0;
  for (const auto& p : params) {
    total += p.k;
    total += p.b.value_or(1);
  }
  return total;
}

}  // namespace convexgeo
