#include "convexgeo/core.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

namespace convexgeo {

bool is_valid_token(std::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

GroundSet::GroundSet(std::vector<std::string> names) {
  for (const auto& n : names) {
    if (!is_valid_token(n)) throw InputError("invalid element name '" + n + "'");
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  if (names.size() > kMaxElements) {
    throw InputError("ground set has " + std::to_string(names.size()) +
                     " elements; at most " + std::to_string(kMaxElements) +
                     " are supported");
  }
  names_ = std::move(names);
  for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);
}

std::optional<std::size_t> GroundSet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GroundSet::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InputError("unknown element '" + std::string(name) + "'");
}

ElementSet GroundSet::set_of(std::span<const std::string> names) const {
  ElementSet s;
  for (const auto& n : names) s.insert(index_of(n));
  return s;
}

std::string GroundSet::format(ElementSet s, std::string_view separator) const {
  std::string out;
  bool first = true;
  for (std::size_t i : s) {
    if (!first) out += separator;
    out += name(i);
    first = false;
  }
  return out;
}

bool implication_less(const Implication& a, const Implication& b) {
  if (a.premise.size() != b.premise.size()) {
    return a.premise.size() < b.premise.size();
  }
  if (a.premise != b.premise) return lex_less(a.premise, b.premise);
  return lex_less(a.conclusion, b.conclusion);
}

void normalize(Basis& basis) {
  std::sort(basis.begin(), basis.end(), implication_less);
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
}

ElementSet close_under(std::span<const Implication> basis, ElementSet seed) {
  ElementSet z = seed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& imp : basis) {
      if (imp.premise.subset_of(z) && !imp.conclusion.subset_of(z)) {
        z |= imp.conclusion;
        changed = true;
      }
    }
  }
  return z;
}

bool respects(std::span<const Implication> basis, ElementSet candidate) {
  return std::all_of(basis.begin(), basis.end(), [&](const Implication& imp) {
    return !imp.premise.subset_of(candidate) ||
           imp.conclusion.subset_of(candidate);
  });
}

bool entails(std::span<const Implication> basis, const Implication& imp) {
  return imp.conclusion.subset_of(close_under(basis, imp.premise));
}

bool bases_equivalent(std::span<const Implication> first,
                      std::span<const Implication> second) {
  auto covered = [](std::span<const Implication> from,
                    std::span<const Implication> by) {
    return std::all_of(from.begin(), from.end(),
                       [&](const Implication& imp) { return entails(by, imp); });
  };
  return covered(first, second) && covered(second, first);
}

BinaryOrder::BinaryOrder(std::vector<ElementSet> below) : below_(std::move(below)) {}

ElementSet BinaryOrder::maximal(ElementSet s) const {
  ElementSet dominated;
  for (std::size_t a : s) dominated |= below_[a] & s;
  return s - dominated;
}

bool BinaryOrder::is_ideal(ElementSet s) const {
  for (std::size_t a : s) {
    if (!below_[a].subset_of(s)) return false;
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> BinaryOrder::strict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < below_.size(); ++a) {
    for (std::size_t b : below_[a]) out.emplace_back(a, b);
  }
  return out;
}

struct ClosureSystem::Cache {
  std::once_flag family_once;
  std::vector<ElementSet> family;
  std::vector<bool> table;

  std::once_flag order_once;
  std::optional<BinaryOrder> order;
  std::string order_error;
};

ClosureSystem::ClosureSystem() : cache_(std::make_shared<Cache>()) {}

ClosureSystem::ClosureSystem(GroundSet ground, Basis implications, std::size_t cap)
    : ground_(std::move(ground)),
      implications_(std::move(implications)),
      cap_(cap),
      cache_(std::make_shared<Cache>()) {
  const ElementSet all = ground_.all();
  for (const auto& imp : implications_) {
    if (imp.premise.empty()) throw InputError("implication with empty premise");
    if (imp.conclusion.empty()) throw InputError("implication with empty conclusion");
    if (imp.premise.intersects(imp.conclusion)) {
      throw InputError("premise and conclusion of an implication overlap");
    }
    if (!(imp.premise | imp.conclusion).subset_of(all)) {
      throw InputError("implication references an element outside the ground set");
    }
  }
  normalize(implications_);
}

ClosureSystem ClosureSystem::from_closed_family(GroundSet ground,
                                                std::span<const ElementSet> family,
                                                std::size_t cap) {
  const std::size_t n = ground.size();
  if (n > cap) throw CapExceeded("closed-family construction", n, cap);
  const ElementSet all = ground.all();
  std::vector<bool> member(std::size_t{1} << n, false);
  for (ElementSet f : family) {
    if (!f.subset_of(all)) throw InputError("closed family member outside the ground set");
    member[f.bits()] = true;
  }
  if (!member[all.bits()]) throw InputError("closed family does not contain the ground set");
  for (ElementSet f : family) {
    for (ElementSet g : family) {
      if (!member[(f & g).bits()]) {
        throw InputError("closed family is not closed under intersection");
      }
    }
  }
  Basis basis;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    if (member[bits]) continue;
    const ElementSet x = ElementSet::from_bits(bits);
    ElementSet phi = all;
    for (ElementSet f : family) {
      if (x.subset_of(f)) phi &= f;
    }
    if (x.empty()) {
      throw InputError("closed family does not contain the empty set");
    }
    basis.push_back({x, phi - x});
  }
  return ClosureSystem(std::move(ground), std::move(basis), cap);
}

ClosureSystem ClosureSystem::with_implications(Basis implications) const {
  return ClosureSystem(ground_, std::move(implications), cap_);
}

ClosureSystem ClosureSystem::with_cap(std::size_t cap) const {
  return ClosureSystem(ground_, implications_, cap);
}

ElementSet ClosureSystem::closure(ElementSet seed) const {
  if (!seed.subset_of(ground_.all())) {
    throw InputError("closure seed contains elements outside the ground set");
  }
  return close_under(implications_, seed);
}

bool ClosureSystem::is_closed(ElementSet s) const {
  return respects(implications_, s);
}

void ClosureSystem::require_within_cap(std::string_view operation) const {
  require_within_cap(operation, cap_);
}

void ClosureSystem::require_within_cap(std::string_view operation,
                                       std::size_t cap) const {
  if (size() > cap) throw CapExceeded(std::string(operation), size(), cap);
}

const std::vector<ElementSet>& ClosureSystem::closed_sets() const {
  require_within_cap("closed-set enumeration");
  std::call_once(cache_->family_once, [this] {
    const std::uint64_t count = std::uint64_t{1} << size();
    cache_->table.assign(count, false);
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      const ElementSet s = ElementSet::from_bits(bits);
      if (is_closed(s)) {
        cache_->table[bits] = true;
        cache_->family.push_back(s);
      }
    }
    std::sort(cache_->family.begin(), cache_->family.end(), size_lex_less);
  });
  return cache_->family;
}

const std::vector<bool>& ClosureSystem::closed_table() const {
  closed_sets();
  return cache_->table;
}

bool ClosureSystem::is_standard() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (!is_closed(closure(ElementSet::singleton(i)).without(i))) return false;
  }
  return true;
}

const BinaryOrder& ClosureSystem::binary_order() const {
  std::call_once(cache_->order_once, [this] {
    if (!is_standard()) {
      cache_->order_error = "system is not standard; the binary order is undefined";
      return;
    }
    std::vector<ElementSet> below(size());
    for (std::size_t i = 0; i < size(); ++i) {
      below[i] = closure(ElementSet::singleton(i)).without(i);
    }
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j : below[i]) {
        if (below[j].contains(i)) {
          cache_->order_error = "binary order is not antisymmetric";
          return;
        }
      }
    }
    cache_->order.emplace(std::move(below));
  });
  if (!cache_->order) throw DomainError(cache_->order_error);
  return *cache_->order;
}

std::vector<ElementSet> closed_sets(const ClosureSystem& sys) {
  return sys.closed_sets();
}

AxiomReport verify_axioms(const ClosureSystem& sys) {
  sys.require_within_cap("axiom verification");
  AxiomReport report;
  report.zero_closed = sys.closure(ElementSet{}).empty();
  report.standard = sys.is_standard();
  report.anti_exchange = true;
  const std::size_t n = sys.size();
  for (ElementSet x_set : sys.closed_sets()) {
    std::vector<ElementSet> extended(n);
    for (std::size_t e = 0; e < n; ++e) {
      if (!x_set.contains(e)) extended[e] = sys.closure(x_set.with(e));
    }
    for (std::size_t x = 0; x < n && report.anti_exchange; ++x) {
      if (x_set.contains(x)) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x || x_set.contains(y)) continue;
        if (extended[y].contains(x) && extended[x].contains(y)) {
          report.anti_exchange = false;
          report.witness = AntiExchangeWitness{x_set, x, y};
          break;
        }
      }
    }
    if (!report.anti_exchange) break;
  }
  report.is_convex_geometry = report.zero_closed && report.anti_exchange;
  return report;
}

void require_convex_geometry(const ClosureSystem& sys, std::string_view operation) {
  if (!verify_axioms(sys).is_convex_geometry) {
    throw DomainError(std::string(operation) + " requires a convex geometry");
  }
}

ElementSet extreme_points(const ClosureSystem& sys, ElementSet closed) {
  if (!sys.is_closed(closed)) throw DomainError("extreme points requested for a non-closed set");
  ElementSet ex;
  for (std::size_t x : closed) {
    if (!sys.closure(closed.without(x)).contains(x)) ex.insert(x);
  }
  return ex;
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::input: return "input";
    case Provenance::canonical: return "canonical";
    case Provenance::k: return "K";
    case Provenance::d: return "D";
    case Provenance::foe: return "FOE";
    case Provenance::carousel: return "carousel";
    case Provenance::order_convex: return "order-convex";
    case Provenance::brute: return "brute";
  }
  return "input";
}

BasisReport basis_stats(Basis basis, Provenance provenance) {
  normalize(basis);
  BasisReport report;
  for (const auto& imp : basis) {
    report.s_left += imp.premise.size();
    report.s_right += imp.conclusion.size();
  }
  report.s = report.s_left + report.s_right;
  report.count = basis.size();
  report.implications = std::move(basis);
  report.provenance = provenance;
  return report;
}

}  // namespace convexgeo
