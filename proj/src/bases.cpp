#include "convexgeo/bases.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "convexgeo/basis_io.hpp"

namespace convexgeo {

std::vector<ElementSet> minimal_order_generators(const ClosureSystem& sys,
                                                 const CriticalRecord& record) {
  if (record.binary()) return {record.critical};
  const BinaryOrder& order = sys.binary_order();
  std::vector<ElementSet> ideals;
  for_each_subset_by_size(record.critical, [&](ElementSet candidate) {
    if (!order.is_ideal(candidate)) return true;
    if (sys.closure(candidate) != record.essential) return true;
    const bool has_smaller = std::any_of(ideals.begin(), ideals.end(), [&](ElementSet i) {
      return i.subset_of(candidate);
    });
    if (!has_smaller) ideals.push_back(candidate);
    return true;
  });
  std::vector<ElementSet> generators;
  for (ElementSet ideal : ideals) generators.push_back(order.maximal(ideal));
  std::sort(generators.begin(), generators.end(), lex_less);
  return generators;
}

BasisReport k_basis(const ClosureSystem& sys) {
  const BinaryOrder& order = sys.binary_order();
  Basis basis;
  for (const auto& rec : critical_sets(sys)) {
    const auto gens = minimal_order_generators(sys, rec);
    if (gens.size() != 1) {
      throw DomainError("essential set {" + sys.ground().format(rec.essential) +
                        "} has " + std::to_string(gens.size()) +
                        " minimal order generators; the K-basis is not unique");
    }
    basis.push_back({gens.front(), order.maximal(rec.essential - rec.critical)});
  }
  return basis_stats(std::move(basis), Provenance::k);
}

bool DRelation::acyclic() const {
  for (std::size_t x = 0; x < reach.size(); ++x) {
    if (reach[x].contains(x)) return false;
  }
  return true;
}

DRelation make_d_relation(std::size_t ground_size, std::span<const Implication> basis) {
  DRelation rel;
  std::vector<ElementSet> direct(ground_size);
  for (const auto& imp : basis) {
    if (imp.binary()) continue;
    for (std::size_t b : imp.conclusion) direct[b] |= imp.premise;
  }
  for (std::size_t b = 0; b < ground_size; ++b) {
    for (std::size_t a : direct[b]) rel.pairs.emplace_back(b, a);
  }
  // Transitive closure by repeated relaxation; ground sets are small.
  rel.reach = direct;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t b = 0; b < ground_size; ++b) {
      ElementSet next = rel.reach[b];
      for (std::size_t a : rel.reach[b]) next |= rel.reach[a];
      if (next != rel.reach[b]) {
        rel.reach[b] = next;
        changed = true;
      }
    }
  }
  return rel;
}

namespace {

// Replaces premise elements by sets of elements strictly below them while
// the premise still implies b. Each step lowers the premise in the multiset
// extension of the binary order, so the loop terminates.
ElementSet refine_cover(const ClosureSystem& sys, const BinaryOrder& order,
                        ElementSet premise, std::size_t b) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a : premise) {
      const ElementSet rest = premise.without(a);
      for_each_subset_by_size(order.below(a), [&](ElementSet lower) {
        const ElementSet candidate = rest | lower;
        if (!sys.closure(candidate).contains(b)) return true;
        premise = candidate;
        changed = true;
        return false;
      });
      if (changed) break;
    }
  }
  return premise;
}

}  // namespace

DBasisResult d_basis(const ClosureSystem& sys) {
  sys.require_within_cap("D-basis");
  const BinaryOrder& order = sys.binary_order();
  Basis basis;
  for (const auto& [a, b] : order.strict_pairs()) {
    basis.push_back({ElementSet::singleton(a), ElementSet::singleton(b)});
  }
  for (const auto& rec : critical_sets(sys)) {
    if (rec.binary()) continue;
    for (std::size_t b : rec.essential - rec.critical) {
      const bool binary_derived = std::any_of(
          rec.critical.begin(), rec.critical.end(),
          [&](std::size_t a) { return order.greater(a, b); });
      if (binary_derived) continue;
      basis.push_back({refine_cover(sys, order, rec.critical, b), ElementSet::singleton(b)});
    }
  }
  DBasisResult result;
  result.basis = basis_stats(std::move(basis), Provenance::d);
  result.relation = make_d_relation(sys.size(), result.basis.implications);
  return result;
}

DCycleReport find_d_cycle(const DRelation& relation) {
  const std::size_t n = relation.reach.size();
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& [b, a] : relation.pairs) succ[b].push_back(a);

  DCycleReport best;
  for (std::size_t start = 0; start < n; ++start) {
    if (!relation.reach[start].contains(start)) continue;
    // Shortest path from start back to itself.
    std::vector<std::size_t> parent(n, n);
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    std::size_t last = n;
    while (!queue.empty() && last == n) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : succ[u]) {
        if (v == start) {
          last = u;
          break;
        }
        if (!seen[v]) {
          seen[v] = true;
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (last == n) continue;
    std::vector<std::size_t> path;
    for (std::size_t v = last; v != start; v = parent[v]) path.push_back(v);
    path.push_back(start);
    std::reverse(path.begin(), path.end());
    path.push_back(start);
    if (!best.has_cycle || path.size() < best.cycle.size()) {
      best.has_cycle = true;
      best.cycle = std::move(path);
    }
  }
  return best;
}

DCycleReport has_d_cycles(const ClosureSystem& sys) {
  return find_d_cycle(d_basis(sys).relation);
}

BasisReport sigma_foe(const ClosureSystem& sys) {
  require_convex_geometry(sys, "the FOE basis");
  const auto cycle = has_d_cycles(sys);
  if (cycle.has_cycle) {
    std::string names;
    for (std::size_t i = 0; i < cycle.cycle.size(); ++i) {
      if (i) names += " D ";
      names += sys.ground().name(cycle.cycle[i]);
    }
    throw DomainError("the FOE basis requires a system without D-cycles; found " + names);
  }
  const BinaryOrder& order = sys.binary_order();
  const auto records = critical_sets(sys);
  Basis basis;
  for (const auto& rec : records) {
    const ElementSet conclusion = rec.essential - rec.critical;
    if (rec.binary()) {
      basis.push_back({rec.critical, extreme_points(sys, conclusion)});
      continue;
    }
    // Drop y when a smaller essential set already produces it from a
    // non-binary critical, then keep the order-maximal survivors.
    ElementSet kept;
    for (std::size_t y : conclusion) {
      const bool produced_below = std::any_of(records.begin(), records.end(),
          [&](const CriticalRecord& other) {
            return !other.binary() && other.critical != rec.critical &&
                   (other.essential - other.critical).contains(y) &&
                   other.essential.proper_subset_of(rec.essential);
          });
      if (!produced_below) kept.insert(y);
    }
    kept = order.maximal(kept);
    if (kept.empty()) {
      throw InternalError("FOE conclusion became empty for critical set {" +
                          sys.ground().format(rec.critical) + "}");
    }
    basis.push_back({minimal_order_generators(sys, rec).front(), kept});
  }
  BasisReport report = basis_stats(std::move(basis), Provenance::foe);
  if (!bases_equivalent(report.implications, sys.implications())) {
    throw InternalError("FOE basis is not equivalent to the input");
  }
  return report;
}

}  // namespace convexgeo
