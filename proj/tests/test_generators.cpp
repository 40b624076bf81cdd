#include <array>
#include <random>
#include <set>

#include "convexgeo/bases.hpp"
#include "convexgeo/generators.hpp"
#include "convexgeo/optimize.hpp"
#include "doctest.h"
#include "support/examples.hpp"
#include "support/random_systems.hpp"

using namespace convexgeo;
using namespace convexgeo::testing;

namespace {

std::string basis_text(const ClosureSystem& sys) { return text_of(sys, sys.implications()); }

/// Point-in-hull by exhaustive triangle and segment tests, computed with
/// plain integer arithmetic on integer points.
bool in_hull(const std::vector<std::array<long, 2>>& pts, ElementSet s, std::size_t g) {
  auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
    return (pts[a][0] - pts[o][0]) * (pts[b][1] - pts[o][1]) -
           (pts[a][1] - pts[o][1]) * (pts[b][0] - pts[o][0]);
  };
  auto on_segment = [&](std::size_t a, std::size_t b) {
    if (cross(a, b, g) != 0) return false;
    return std::min(pts[a][0], pts[b][0]) <= pts[g][0] && pts[g][0] <= std::max(pts[a][0], pts[b][0]) &&
           std::min(pts[a][1], pts[b][1]) <= pts[g][1] && pts[g][1] <= std::max(pts[a][1], pts[b][1]);
  };
  if (s.contains(g)) return true;
  for (std::size_t a : s) {
    for (std::size_t b : s) {
      if (a < b && on_segment(a, b)) return true;
      for (std::size_t c : s) {
        if (!(a < b && b < c)) continue;
        const long d1 = cross(a, b, g), d2 = cross(b, c, g), d3 = cross(c, a, g);
        if ((d1 >= 0 && d2 >= 0 && d3 >= 0) || (d1 <= 0 && d2 <= 0 && d3 <= 0)) {
          if (cross(a, b, c) != 0) return true;
        }
      }
    }
  }
  return false;
}

/// Meet-semilattice of a random intersection-closed family of subsets.
MeetTable random_meets(std::mt19937_64& rng, std::size_t universe, std::size_t seeds) {
  std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << universe) - 1);
  std::set<std::uint64_t> family;
  for (std::size_t i = 0; i < seeds; ++i) family.insert(bits(rng));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> cur(family.begin(), family.end());
    for (auto a : cur) {
      for (auto b : cur) grew = family.insert(a & b).second || grew;
    }
  }
  std::vector<std::array<std::string, 3>> entries;
  auto name = [](std::uint64_t v) { return "m" + std::to_string(v); };
  for (auto a : family) {
    for (auto b : family) entries.push_back({name(a), name(b), name(a & b)});
  }
  return MeetTable::from_entries(entries);
}

}  // namespace

TEST_CASE("points parsing") {
  auto pts = parse_points("# pts\na 0 0\nb 1/2 -3\n");
  REQUIRE(pts.size() == 2);
  CHECK(pts[1].x == Rational(1, 2));
  CHECK(pts[1].y == Rational(-3));
  CHECK_THROWS_AS(parse_points("a 0\n"), InputError);
  CHECK_THROWS_AS(parse_points("a 1/0 2\n"), InputError);
  CHECK_THROWS_AS(parse_points("a x 2\n"), InputError);
}

TEST_CASE("affine geometries") {
  std::vector<PlanarPoint> triangle{{"a", 0, 0}, {"b", 1, 0}, {"c", 0, 1}};
  CHECK(affine_2d(triangle).implications().empty());

  std::vector<PlanarPoint> line{{"a", 0, 0}, {"m", Rational(1, 3), Rational(2, 3)}, {"b", 1, 2}};
  CHECK(basis_text(affine_2d(line)) == "a b -> m\n");

  auto five = affine_2d(five_points());
  CHECK(five.implications() == system_of(kFivePoint).implications());
  auto six = affine_2d(six_points());
  CHECK(six.implications() == system_of(kSixPoint).implications());

  std::vector<PlanarPoint> dup_name{{"a", 0, 0}, {"a", 1, 0}};
  CHECK_THROWS_AS(affine_2d(dup_name), InputError);
  std::vector<PlanarPoint> coincident{{"a", 0, 0}, {"b", 0, 0}};
  CHECK_THROWS_AS(affine_2d(coincident), InputError);

  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(affine_2d(random_points(rng, 17, 40)), CapExceeded);
}

TEST_CASE("property: affine closure is the convex hull") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 3 + round % 7;
    const auto pts = random_points(rng, n, 6);
    std::vector<std::array<long, 2>> ints;
    for (const auto& p : pts) ints.push_back({p.x.convert_to<long>(), p.y.convert_to<long>()});
    const auto sys = affine_2d(pts);
    for_each_subset(sys.ground().all(), [&](ElementSet s) {
      ElementSet hull;
      // Ground names p0..p9 sort in index order for n <= 10.
      for (std::size_t g = 0; g < n; ++g) {
        if (in_hull(ints, s, g)) hull.insert(g);
      }
      CHECK(sys.closure(s) == hull);
    });
    const auto axioms = verify_axioms(sys);
    CHECK(axioms.is_convex_geometry);
    CHECK(sys.binary_order().strict_pairs().empty());
    CHECK(carousel_check(sys, 2).holds);
  }
}

TEST_CASE("order-convex geometry") {
  auto chain = parse_poset("x < z\nz < y\n");
  CHECK(basis_text(order_convex_basis(chain)) == "x y -> z\n");
  CHECK(order_convex_basis(parse_poset("a\nb\nc\n")).implications().empty());
  auto diamond = parse_poset("x < z1\nx < z2\nz1 < y\nz2 < y\n");
  CHECK(basis_text(order_convex_basis(diamond)) == "x y -> z1 z2\n");
  CHECK_THROWS_AS(parse_poset("a < b\nb < a\n"), InputError);
  CHECK_THROWS_AS(parse_poset("a < a\n"), InputError);
  CHECK_THROWS_AS(parse_poset("a < b < c\n"), InputError);
}

TEST_CASE("poset queries") {
  auto p = parse_poset("a < b\nb < c\na < d\n");
  const auto& g = p.ground();
  CHECK(p.less(g.index_of("a"), g.index_of("c")));
  CHECK(p.covers(g.index_of("b"), g.index_of("a")));
  CHECK_FALSE(p.covers(g.index_of("c"), g.index_of("a")));
  CHECK(p.open_interval(g.index_of("a"), g.index_of("c")) == ElementSet::singleton(g.index_of("b")));
  CHECK(p.strict_pairs().size() == 4);
  CHECK(p.cover_pairs().size() == 3);
  auto comps = p.components(g.all() - ElementSet::singleton(g.index_of("a")));
  CHECK(comps.size() == 2);
}

TEST_CASE("property: order-convex geometries") {
  std::mt19937_64 rng(47);
  for (int round = 0; round < 40; ++round) {
    const Poset p = random_poset(rng, 3 + round % 5, 0.4);
    const auto sys = order_convex_basis(p);
    CHECK(verify_axioms(sys).is_convex_geometry);
    CHECK(sys.binary_order().strict_pairs().empty());
    CHECK(canonical_basis(sys).implications == sys.implications());
  }
}

TEST_CASE("subsemilattices") {
  std::vector<std::array<std::string, 3>> v{{"a", "b", "z0"}, {"a", "z0", "z0"}, {"b", "z0", "z0"}};
  auto sys = subsemilattice_basis(MeetTable::from_entries(v));
  CHECK(basis_text(sys) == "a b -> z0\n");

  auto chain = parse_meet_table("a ^ b = a\nb ^ c = b\na ^ c = a\n");
  CHECK(subsemilattice_basis(chain).implications().empty());

  auto flat = parse_meet_table(
      "a ^ b = z0\na ^ c = z0\nb ^ c = z0\na ^ z0 = z0\nb ^ z0 = z0\nc ^ z0 = z0\n");
  CHECK(basis_text(subsemilattice_basis(flat)) == "a b -> z0\na c -> z0\nb c -> z0\n");

  CHECK_THROWS_AS(parse_meet_table("a ^ b = a\na ^ c = a\n"), InputError);
  CHECK_THROWS_AS(parse_meet_table("a ^ b = a\nb ^ a = b\n"), InputError);
  CHECK_THROWS_AS(parse_meet_table("a ^ a = b\na ^ b = b\n"), InputError);
  // Not associative: (a ^ b) ^ c = c but a ^ (b ^ c) = a.
  CHECK_THROWS_AS(parse_meet_table("a ^ b = c\nb ^ c = a\na ^ c = b\n"), InputError);
  CHECK_THROWS_AS(parse_meet_table("a ^ b\n"), InputError);
}

TEST_CASE("suborders") {
  auto sys = suborder_basis(parse_poset("x < y\ny < z\n"));
  CHECK(sys.ground().names() == std::vector<std::string>{"x_y", "x_z", "y_z"});
  CHECK(basis_text(sys) == "x_y y_z -> x_z\n");

  auto empty = suborder_basis(parse_poset("a\nb\n"));
  CHECK(empty.size() == 0);
  CHECK(empty.implications().empty());

  auto four = suborder_basis(parse_poset("a < b\nb < c\nc < d\n"));
  CHECK(four.size() == 6);
  // Composable triples (x,y),(y,z) in a 4-chain.
  std::size_t triples = 0;
  for (int x = 0; x < 4; ++x) {
    for (int y = x + 1; y < 4; ++y) {
      for (int z = y + 1; z < 4; ++z) ++triples;
    }
  }
  CHECK(four.implications().size() == triples);

  CHECK_THROWS_AS(suborder_basis(parse_poset("a < b_c\na_b < c\n")), InputError);
}

TEST_CASE("property: semilattice and suborder systems are already optimum") {
  std::mt19937_64 rng(53);
  std::size_t checked = 0;
  for (int round = 0; round < 30; ++round) {
    const auto meets = random_meets(rng, 4, 3 + round % 4);
    if (meets.ground().size() > 8) continue;
    const auto sys = subsemilattice_basis(meets);
    CHECK(verify_axioms(sys).is_convex_geometry);
    CHECK_FALSE(has_d_cycles(sys).has_cycle);
    CHECK(canonical_basis(sys).implications == sys.implications());
    CHECK(brute_force_optimum(sys).basis.s == basis_stats(sys.implications()).s);
    ++checked;
  }
  for (int round = 0; round < 30; ++round) {
    const Poset p = random_poset(rng, 3 + round % 3, 0.5);
    const auto sys = suborder_basis(p);
    if (sys.size() > 8) continue;
    CHECK(verify_axioms(sys).is_convex_geometry);
    CHECK_FALSE(has_d_cycles(sys).has_cycle);
    CHECK(canonical_basis(sys).implications == sys.implications());
    CHECK(brute_force_optimum(sys).basis.s == basis_stats(sys.implications()).s);
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("component-quadratic check") {
  auto cq = system_of(kCqWithCycle);
  auto r = cq_check(cq.implications(), cq.size());
  CHECK(r.holds);
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0] == set_of(cq, "x y"));

  auto u = system_of(kUntractable);
  auto ru = cq_check(u.implications(), u.size());
  CHECK_FALSE(ru.holds);
  CHECK(ru.witness.has_value());

  auto d = system_of(kDGeometry);
  auto rd = cq_check(d.implications(), d.size());
  CHECK_FALSE(rd.holds);
  REQUIRE(rd.components.size() == 1);
  CHECK(rd.components[0] == set_of(d, "a1 b1 c1 d a2"));

  auto six = system_of(kSixPoint);
  const auto opt = optimize_carousel(six).basis.implications;
  auto r6 = cq_check(opt, six.size());
  CHECK_FALSE(r6.holds);
  REQUIRE(r6.witness.has_value());
  const std::string w = format_implication(six.ground(), opt[r6.witness->implication]);
  CHECK((w == "a y z -> x" || w == "b x z -> y" || w == "c x y -> z"));
  CHECK((r6.witness->component & opt[r6.witness->implication].premise).size() >= 2);
  CHECK(r6.witness->component.contains(r6.witness->conclusion_element));
}
