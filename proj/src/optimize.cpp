#include "convexgeo/optimize.hpp"

#include <algorithm>
#include <numeric>

#include "convexgeo/bases.hpp"
#include "convexgeo/canonical.hpp"
#include "convexgeo/generators.hpp"

namespace convexgeo {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::carousel: return "carousel";
    case Strategy::d_geometry: return "d-geometry";
    case Strategy::order_convex: return "order-convex";
    case Strategy::brute: return "brute";
    case Strategy::k_basis: return "k-basis";
  }
  return "brute";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (Strategy s : {Strategy::carousel, Strategy::d_geometry, Strategy::order_convex,
                     Strategy::brute, Strategy::k_basis}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

CarouselResult carousel_check(const ClosureSystem& sys, std::size_t n) {
  if (n == 0) throw InputError("the Carousel parameter must be positive");
  sys.require_within_cap("Carousel check");
  CarouselResult result;
  const std::size_t size = sys.size();
  std::vector<ElementSet> reach(size);
  for_each_subset_by_size(sys.ground().all(), [&](ElementSet x_set) {
    if (x_set.size() < 2) return true;
    const ElementSet phi = sys.closure(x_set);
    const std::size_t bound = std::min(n, x_set.size() - 1);
    for (std::size_t y : phi) reach[y] = ElementSet{};
    // Closures are monotone, so only the largest admissible X' matter.
    for_each_subset_of_size(x_set, bound, [&](ElementSet sub) {
      for (std::size_t y : phi) reach[y] |= sys.closure(sub.with(y));
      return true;
    });
    for (std::size_t x : phi) {
      for (std::size_t y : phi) {
        if (!reach[y].contains(x)) {
          result.holds = false;
          result.counterexample = CarouselWitness{x_set, x, y};
          return false;
        }
      }
    }
    return true;
  });
  return result;
}

namespace {

OptimizationOutcome finish(const ClosureSystem& sys, BasisReport basis, Strategy strategy,
                           std::vector<std::string> certificate) {
  OptimizationOutcome out;
  out.verified_equivalent = bases_equivalent(basis.implications, sys.implications());
  if (!out.verified_equivalent) {
    throw InternalError(std::string(to_string(strategy)) +
                        " result is not equivalent to the input basis");
  }
  out.basis = std::move(basis);
  out.strategy = strategy;
  out.certificate = std::move(certificate);
  return out;
}

}  // namespace

OptimizationOutcome optimize_carousel(const ClosureSystem& sys) {
  const auto records = critical_sets(sys);
  Basis basis;
  for (const auto& rec : records) {
    if (rec.binary()) {
      basis.push_back({rec.critical, extreme_points(sys, rec.essential - rec.critical)});
      continue;
    }
    // In a convex geometry the minimal order generator is Ex(phi(C)).
    const auto generators = minimal_order_generators(sys, rec);
    if (generators.size() != 1) {
      throw DomainError("essential set {" + sys.ground().format(rec.essential) +
                        "} has no unique minimal order generator");
    }
    const ElementSet choices = rec.essential - rec.critical;
    basis.push_back({generators.front(), ElementSet::singleton(choices.lowest())});
  }
  BasisReport report = basis_stats(std::move(basis), Provenance::carousel);
  if (!bases_equivalent(report.implications, sys.implications())) {
    Basis canonical;
    for (const auto& rec : records) canonical.push_back({rec.critical, rec.essential - rec.critical});
    throw CarouselAssumptionFailed(
        "singleton-conclusion reduction is not equivalent to the input; "
        "the system does not have the Carousel property",
        basis_stats(std::move(canonical), Provenance::canonical));
  }
  return finish(sys, std::move(report), Strategy::carousel,
                {"non-binary conclusions reduced to one element each"});
}

OptimizationOutcome optimize_d_geometry(const ClosureSystem& sys) {
  return finish(sys, sigma_foe(sys), Strategy::d_geometry,
                {"convex geometry without D-cycles; FOE basis"});
}

OptimizationOutcome optimize_order_convex(const Poset& poset) {
  const ClosureSystem canonical = order_convex_basis(poset);
  Basis basis;
  std::size_t components = 0;
  for (const auto& imp : canonical.implications()) {
    ElementSet reps;
    for (ElementSet comp : poset.components(imp.conclusion)) {
      reps.insert(comp.lowest());
      ++components;
    }
    basis.push_back({imp.premise, reps});
  }
  return finish(canonical, basis_stats(std::move(basis), Provenance::order_convex),
                Strategy::order_convex,
                {std::to_string(canonical.implications().size()) + " intervals, " +
                 std::to_string(components) + " interval components"});
}

namespace {

struct Candidate {
  ElementSet premise;
  ElementSet conclusion;
};

struct CriticalSlot {
  CriticalRecord record;
  std::vector<Candidate> options;
  std::size_t max_conclusion = 0;
  /// Last slot with this essential set; entailment is checked there.
  bool closes_group = false;
  std::size_t group_begin = 0;
};

class BruteForceSearch {
 public:
  explicit BruteForceSearch(std::vector<CriticalSlot> slots) : slots_(std::move(slots)) {
    suffix_max_.assign(slots_.size() + 1, 0);
    for (std::size_t i = slots_.size(); i-- > 0;) {
      suffix_max_[i] = suffix_max_[i + 1] + slots_[i].max_conclusion;
    }
    chosen_.resize(slots_.size());
  }

  std::size_t max_total() const { return suffix_max_.front(); }
  std::size_t visited() const { return visited_; }

  /// First assignment in enumeration order whose conclusion sizes sum to
  /// `budget` and that generates every essential set.
  std::optional<Basis> run(std::size_t budget) {
    if (slots_.empty()) return budget == 0 ? std::optional<Basis>(Basis{}) : std::nullopt;
    if (search(0, budget)) {
      Basis out;
      for (const auto& c : chosen_) out.push_back({c.premise, c.conclusion});
      return out;
    }
    return std::nullopt;
  }

 private:
  bool search(std::size_t i, std::size_t remaining) {
    if (i == slots_.size()) return remaining == 0;
    const std::size_t rest = slots_.size() - i - 1;
    const auto& slot = slots_[i];
    for (const auto& option : slot.options) {
      const std::size_t r = option.conclusion.size();
      if (r + rest > remaining) continue;
      if (remaining - r > suffix_max_[i + 1]) continue;
      ++visited_;
      chosen_[i] = option;
      if (slot.closes_group && !group_generated(slot.group_begin, i)) continue;
      if (search(i + 1, remaining - r)) return true;
    }
    return false;
  }

  bool group_generated(std::size_t begin, std::size_t end) const {
    std::vector<Implication> prefix;
    prefix.reserve(end + 1);
    for (std::size_t j = 0; j <= end; ++j) prefix.push_back({chosen_[j].premise, chosen_[j].conclusion});
    for (std::size_t j = begin; j <= end; ++j) {
      if (!slots_[j].record.essential.subset_of(close_under(prefix, slots_[j].record.critical))) {
        return false;
      }
    }
    return true;
  }

  std::vector<CriticalSlot> slots_;
  std::vector<std::size_t> suffix_max_;
  std::vector<Candidate> chosen_;
  std::size_t visited_ = 0;
};

}  // namespace

OptimizationOutcome brute_force_optimum(const ClosureSystem& sys) {
  sys.require_within_cap("brute-force optimum", std::min(sys.cap(), kBruteForceCap));
  std::vector<CriticalSlot> slots;
  for (auto& rec : critical_sets(sys)) {
    CriticalSlot slot;
    for (ElementSet u : rec.minimal_generators) {
      for_each_subset_by_size(rec.essential - u, [&](ElementSet y) {
        if (!y.empty()) slot.options.push_back({u, y});
        return true;
      });
      slot.max_conclusion = std::max(slot.max_conclusion, (rec.essential - u).size());
    }
    slot.record = std::move(rec);
    slots.push_back(std::move(slot));
  }
  // Implications that can fire inside phi(C) have essential sets contained in
  // phi(C); ordering slots by essential size lets each group be checked as
  // soon as it is assigned.
  std::stable_sort(slots.begin(), slots.end(), [](const CriticalSlot& a, const CriticalSlot& b) {
    if (a.record.essential.size() != b.record.essential.size()) {
      return a.record.essential.size() < b.record.essential.size();
    }
    if (a.record.essential != b.record.essential) return lex_less(a.record.essential, b.record.essential);
    return size_lex_less(a.record.critical, b.record.critical);
  });
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const bool last = i + 1 == slots.size() || slots[i + 1].record.essential != slots[i].record.essential;
    slots[i].closes_group = last;
    if (i > 0 && slots[i - 1].record.essential == slots[i].record.essential) {
      slots[i].group_begin = slots[i - 1].group_begin;
    } else {
      slots[i].group_begin = i;
    }
  }

  const std::size_t left = std::accumulate(slots.begin(), slots.end(), std::size_t{0},
      [](std::size_t acc, const CriticalSlot& s) { return acc + s.record.k; });
  BruteForceSearch search(slots);
  for (std::size_t budget = slots.size(); budget <= search.max_total(); ++budget) {
    if (auto found = search.run(budget)) {
      BasisReport report = basis_stats(std::move(*found), Provenance::brute);
      return finish(sys, std::move(report), Strategy::brute,
                    {"exhaustive search over " + std::to_string(slots.size()) +
                         " critical sets: left size " + std::to_string(left) +
                         ", right size " + std::to_string(budget) + " is minimum",
                     std::to_string(search.visited()) + " partial assignments visited"});
    }
  }
  if (slots.empty()) {
    return finish(sys, basis_stats({}, Provenance::brute), Strategy::brute,
                  {"system has no critical sets"});
  }
  throw InternalError("brute-force search found no equivalent basis");
}

namespace {

/// Smallest n in [2, |G| - 1] with the n-Carousel property, if any.
std::optional<std::size_t> carousel_parameter(const ClosureSystem& sys) {
  if (sys.size() < 3 || sys.size() > std::min(sys.cap(), kCarouselSearchCap)) return std::nullopt;
  const std::size_t weakest = sys.size() - 1;
  if (!carousel_check(sys, weakest).holds) return std::nullopt;
  std::size_t n = 2;
  while (n < weakest && !carousel_check(sys, n).holds) ++n;
  return n;
}

}  // namespace

OptimizationOutcome optimize_auto(const ClosureSystem& sys) {
  if (!sys.is_standard()) throw DomainError("optimization requires a standard closure system");
  const bool convex = verify_axioms(sys).is_convex_geometry;
  std::vector<std::string> notes;
  if (convex) {
    const auto cycle = has_d_cycles(sys);
    if (!cycle.has_cycle) return optimize_d_geometry(sys);
    notes.push_back("D-cycles present");
  } else {
    notes.push_back("not a convex geometry");
  }

  if (const auto n = carousel_parameter(sys)) {
    try {
      auto out = optimize_carousel(sys);
      out.certificate.insert(out.certificate.begin(),
                             std::to_string(*n) + "-Carousel property verified");
      // Outside convex geometries the reduction is only known to be optimal
      // when it meets the lower bound from the fixed parameters.
      const std::size_t bound = optimum_lower_bound(optimum_parameters(sys));
      if (convex || out.basis.s == bound) {
        if (!convex) {
          out.certificate.push_back("size " + std::to_string(bound) +
                                    " equals the optimum lower bound");
        }
        return out;
      }
      notes.push_back("Carousel reduction above the optimum lower bound");
    } catch (const CarouselAssumptionFailed&) {
      notes.push_back("Carousel reduction failed verification");
    }
  } else {
    notes.push_back("no Carousel parameter found");
  }

  if (sys.size() <= std::min(sys.cap(), kBruteForceCap)) {
    auto out = brute_force_optimum(sys);
    out.certificate.insert(out.certificate.begin(), notes.begin(), notes.end());
    return out;
  }
  auto out = finish(sys, k_basis(sys), Strategy::k_basis, notes);
  out.warnings.push_back("no tractable strategy applies and the ground set exceeds the "
                         "brute-force cap; the K-basis is not certified optimum");
  return out;
}

}  // namespace convexgeo
