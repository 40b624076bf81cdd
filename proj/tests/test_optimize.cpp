#include <numeric>
#include <random>

#include "convexgeo/bases.hpp"
#include "convexgeo/generators.hpp"
#include "convexgeo/optimize.hpp"
#include "doctest.h"
#include "support/examples.hpp"
#include "support/oracles.hpp"
#include "support/random_systems.hpp"

using namespace convexgeo;
using namespace convexgeo::testing;

namespace {

/// No X' inside X of admissible size puts x into phi({y} + X').
bool violates(const ClosureSystem& sys, ElementSet x_set, std::size_t x, std::size_t y,
              std::size_t n) {
  bool reached = false;
  for_each_subset(x_set, [&](ElementSet sub) {
    if (sub == x_set || sub.size() > n) return;
    reached = reached || sys.closure(sub.with(y)).contains(x);
  });
  return !reached;
}

/// Number of connected components of the cover graph on `subset`, from
/// the order relation directly.
std::size_t cover_components(const Poset& p, ElementSet subset) {
  std::vector<std::size_t> parent(p.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t a : subset) {
    for (std::size_t b : subset) {
      if (!p.less(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < p.size(); ++c) cover = cover && !(p.less(a, c) && p.less(c, b));
      if (cover) parent[find(a)] = find(b);
    }
  }
  std::size_t roots = 0;
  for (std::size_t a : subset) roots += find(a) == a;
  return roots;
}

Poset poset_of(const char* text) { return parse_poset(text); }

}  // namespace

TEST_CASE("strategy names") {
  CHECK(to_string(Strategy::d_geometry) == "d-geometry");
  CHECK(parse_strategy("order-convex") == Strategy::order_convex);
  CHECK_FALSE(parse_strategy("greedy").has_value());
}

TEST_CASE("Carousel check") {
  auto e1 = system_of(kCarouselBinary);
  CHECK(carousel_check(e1, 2).holds);
  CHECK(carousel_check(system_of(kFivePoint), 3).holds);

  auto sub = system_of(kFivePointSub);
  auto r = carousel_check(sub, 3);
  CHECK_FALSE(r.holds);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->set == set_of(sub, "a b"));
  CHECK(violates(sub, r.counterexample->set, r.counterexample->x, r.counterexample->y, 3));
  const auto x = sub.ground().index_of("x");
  const auto z = sub.ground().index_of("z");
  CHECK(sub.closure(set_of(sub, "a b")).contains(x));
  CHECK(sub.closure(set_of(sub, "a b")).contains(z));
  CHECK(violates(sub, set_of(sub, "a b"), x, z, 3));

  auto untractable = system_of(kUntractable);
  for (std::size_t n = 1; n <= 6; ++n) {
    auto u = carousel_check(untractable, n);
    CHECK_FALSE(u.holds);
    REQUIRE(u.counterexample.has_value());
    CHECK(violates(untractable, u.counterexample->set, u.counterexample->x, u.counterexample->y, n));
  }
  CHECK_THROWS_AS(carousel_check(e1, 0), InputError);
  CHECK_THROWS_AS(carousel_check(system_of(kDGeometry, 4), 2), CapExceeded);
}

TEST_CASE("Carousel optimization") {
  auto e1 = system_of(kCarouselBinary);
  auto o1 = optimize_carousel(e1);
  CHECK(text_of(e1, o1.basis.implications) == "z -> x\na b c -> x\na c x -> z\n");
  CHECK(o1.basis.s == 10);
  CHECK(o1.strategy == Strategy::carousel);
  CHECK(o1.verified_equivalent);

  auto e2 = system_of(kFivePoint);
  CHECK(text_of(e2, optimize_carousel(e2).basis.implications) ==
        "a b c -> x\na b z -> x\na c x -> z\n");

  auto six = system_of(kSixPoint);
  auto o6 = optimize_carousel(six);
  const std::string text = text_of(six, o6.basis.implications);
  for (const char* kept : {"a y z -> x\n", "b x z -> y\n", "c x y -> z\n"}) {
    CHECK(text.find(kept) != std::string::npos);
  }
  CHECK(o6.basis.count == 7);
  for (const auto& imp : o6.basis.implications) CHECK(imp.conclusion.size() == 1);
  CHECK(o6.basis.s == 28);

  auto failing = system_of(kCqWithCycle);
  try {
    optimize_carousel(failing);
    FAIL("expected the Carousel reduction to fail");
  } catch (const CarouselAssumptionFailed& e) {
    CHECK(e.canonical().implications == canonical_basis(failing).implications);
  }
}

TEST_CASE("D-geometry optimization") {
  auto d = system_of(kDGeometry);
  auto out = optimize_d_geometry(d);
  CHECK(out.basis.implications == d.implications());
  CHECK(out.basis.s == 17);
  CHECK(out.strategy == Strategy::d_geometry);

  auto small = system_of("a b -> x\na x -> y\n");
  CHECK(optimize_d_geometry(small).basis.implications == small.implications());
  CHECK_THROWS_AS(optimize_d_geometry(system_of(kCqWithCycle)), DomainError);
}

TEST_CASE("order-convex optimization") {
  auto chain3 = optimize_order_convex(poset_of("x < z\nz < y\n"));
  auto g3 = parse_poset("x < z\nz < y\n").ground();
  CHECK(format_basis(g3, chain3.basis.implications) == "x y -> z\n");

  auto diamond_poset = poset_of("x < z1\nx < z2\nz1 < y\nz2 < y\n");
  auto diamond = optimize_order_convex(diamond_poset);
  CHECK(format_basis(diamond_poset.ground(), diamond.basis.implications) == "x y -> z1 z2\n");

  auto chain4_poset = poset_of("a < b\nb < c\nc < d\n");
  auto chain4 = optimize_order_convex(chain4_poset);
  CHECK(format_basis(chain4_poset.ground(), chain4.basis.implications) ==
        "a c -> b\na d -> b\nb d -> c\n");
  CHECK(chain4.basis.s ==
        brute_force_optimum(order_convex_basis(chain4_poset)).basis.s);
  CHECK(chain4.strategy == Strategy::order_convex);
}

TEST_CASE("brute-force optimum") {
  auto e1 = system_of(kCarouselBinary);
  auto b1 = brute_force_optimum(e1);
  CHECK(b1.basis.s == 10);
  CHECK(b1.basis.count == 3);
  CHECK(b1.basis.provenance == Provenance::brute);

  auto none = brute_force_optimum(ClosureSystem(GroundSet({"a", "b"}), {}));
  CHECK(none.basis.implications.empty());
  CHECK(none.basis.s == 0);

  CHECK(brute_force_optimum(system_of(kDGeometry)).basis.s == 17);
  CHECK(brute_force_optimum(system_of(kCqWithCycle)).basis.s == 13);
  CHECK(brute_force_optimum(system_of(kUntractable)).basis.s == 16);

  auto wide = parse_basis("ground: a b c d e f g h i j k\na b -> c\n").system();
  CHECK_THROWS_AS(brute_force_optimum(wide), CapExceeded);
}

TEST_CASE("automatic strategy") {
  CHECK(optimize_auto(system_of(kDGeometry)).strategy == Strategy::d_geometry);

  auto e1 = optimize_auto(system_of(kCarouselBinary));
  CHECK(e1.strategy == Strategy::carousel);
  CHECK(e1.basis.s == 10);

  CHECK(optimize_auto(system_of(kSixPoint)).strategy == Strategy::carousel);

  auto u = optimize_auto(system_of(kUntractable));
  CHECK(u.strategy == Strategy::brute);
  CHECK(u.basis.s == 16);

  auto wide = parse_basis(std::string("ground: b1 b2 b3 b4 b5\n") + kUntractable).system();
  auto k = optimize_auto(wide);
  CHECK(k.strategy == Strategy::k_basis);
  CHECK_FALSE(k.warnings.empty());
  CHECK(k.verified_equivalent);

  CHECK_THROWS_AS(optimize_auto(system_of("a -> b\nb -> a\n")), DomainError);
}

TEST_CASE("property: fast paths agree with brute force on random convex geometries") {
  std::mt19937_64 rng(37);
  std::size_t carousel_runs = 0;
  for (int round = 0; round < 80; ++round) {
    const std::size_t n = 3 + round % 5;
    auto sys = random_convex_geometry(rng, n, 1 + round % 4);
    const auto brute = brute_force_optimum(sys);
    const auto params = optimum_parameters(sys);

    for (std::size_t c = 1; c < n && c <= 3; ++c) {
      CHECK(carousel_check(sys, c).holds == brute_carousel(sys.implications(), n, c));
    }
    if (n >= 3 && carousel_check(sys, n - 1).holds) {
      ++carousel_runs;
      CHECK(optimize_carousel(sys).basis.s == brute.basis.s);
    }
    if (!has_d_cycles(sys).has_cycle) {
      CHECK(optimize_d_geometry(sys).basis.s == brute.basis.s);
    }
    CHECK(optimize_auto(sys).basis.s == brute.basis.s);

    // Premise sizes are k_C and binary conclusion sizes are b_C.
    std::size_t left = 0;
    std::size_t binary_right = 0;
    std::size_t expected_binary = 0;
    for (const auto& p : params) {
      left += p.k;
      if (p.b) expected_binary += *p.b;
    }
    for (const auto& imp : brute.basis.implications) {
      if (imp.binary()) binary_right += imp.conclusion.size();
    }
    CHECK(brute.basis.s_left == left);
    CHECK(binary_right == expected_binary);
    CHECK(brute.basis.s >= optimum_lower_bound(params));
  }
  CHECK(carousel_runs > 0);
}

TEST_CASE("property: order-convex optimum size") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 2 + round % 6;
    const Poset p = random_poset(rng, n, 0.3 + 0.1 * (round % 5));
    const auto out = optimize_order_convex(p);
    std::size_t expected = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!p.less(a, b)) continue;
        const ElementSet interval = p.open_interval(a, b);
        if (!interval.empty()) expected += 2 + cover_components(p, interval);
      }
    }
    CHECK(out.basis.s == expected);
    const auto sys = order_convex_basis(p);
    CHECK(out.basis.s == brute_force_optimum(sys).basis.s);
    for (const auto& imp : out.basis.implications) {
      for (ElementSet comp : p.components(sys.closure(imp.premise) - imp.premise)) {
        CHECK((imp.conclusion & comp).size() == 1);
      }
    }
  }
}
