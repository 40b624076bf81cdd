#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "convexgeo/core.hpp"
#include "convexgeo/poset.hpp"

namespace convexgeo {

enum class Strategy { carousel, d_geometry, order_convex, brute, k_basis };

std::string_view to_string(Strategy s);
/// Accepts the CLI spellings (`carousel`, `d-geometry`, ...).
std::optional<Strategy> parse_strategy(std::string_view name);

struct OptimizationOutcome {
  BasisReport basis;
  Strategy strategy = Strategy::brute;
  /// Human-readable facts backing the result.
  std::vector<std::string> certificate;
  /// Non-fatal notes, e.g. a result that is not certified optimum.
  std::vector<std::string> warnings;
  bool verified_equivalent = false;
};

/// Largest |G| for brute_force_optimum regardless of the configured cap.
inline constexpr std::size_t kBruteForceCap = 10;
/// Largest |G| for which optimize_auto searches for a Carousel parameter.
inline constexpr std::size_t kCarouselSearchCap = 14;

struct CarouselWitness {
  ElementSet set;
  /// x is not in phi({y} + X') for any admissible X'.
  std::size_t x = 0;
  std::size_t y = 0;
};

struct CarouselResult {
  bool holds = true;
  std::optional<CarouselWitness> counterexample;
};

/// For every X with |X| >= 2 and x, y in phi(X) there is a proper X' of X,
/// |X'| <= min(n, |X| - 1), with x in phi({y} + X'). Throws CapExceeded.
CarouselResult carousel_check(const ClosureSystem& sys, std::size_t n);

/// The reduction of Sigma_ex = {Ex(phi(C)) -> phi(C)} to singleton
/// non-binary conclusions. Premises are the minimal order generators, which
/// coincide with Ex(phi(C)) in a convex geometry. Raised when the result is not equivalent to the
/// input, i.e. the Carousel assumption did not hold.
class CarouselAssumptionFailed : public DomainError {
 public:
  CarouselAssumptionFailed(std::string what, BasisReport canonical)
      : DomainError(std::move(what)), canonical_(std::move(canonical)) {}
  const BasisReport& canonical() const { return canonical_; }

 private:
  BasisReport canonical_;
};

OptimizationOutcome optimize_carousel(const ClosureSystem& sys);
OptimizationOutcome optimize_d_geometry(const ClosureSystem& sys);
/// The ground of the returned basis is poset.ground().
OptimizationOutcome optimize_order_convex(const Poset& poset);
OptimizationOutcome brute_force_optimum(const ClosureSystem& sys);
/// D-geometry, then Carousel, then brute force, then the K-basis with a
/// warning. Standard systems that are not convex geometries skip the
/// D-geometry step and accept a Carousel result only when it meets the
/// optimum lower bound. Throws DomainError unless the system is standard.
OptimizationOutcome optimize_auto(const ClosureSystem& sys);

}  // namespace convexgeo
