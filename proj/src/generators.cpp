#include "convexgeo/generators.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "convexgeo/canonical.hpp"

namespace convexgeo {
namespace {

std::vector<std::vector<std::string>> tokenized_lines(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    lines.push_back(std::move(tokens));
  }
  return lines;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Rational parse_rational(const std::string& token, std::size_t line_no) {
  const auto slash = token.find('/');
  const std::string num = token.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : token.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      (!den.empty() && (den.front() == '-' || den.front() == '+'))) {
    throw InputError("points line " + std::to_string(line_no) + ": invalid coordinate '" +
                     token + "'");
  }
  using boost::multiprecision::cpp_int;
  const cpp_int d(den);
  if (d == 0) {
    throw InputError("points line " + std::to_string(line_no) + ": zero denominator");
  }
  const std::string unsigned_num = num.front() == '+' ? num.substr(1) : num;
  return Rational(cpp_int(unsigned_num), d);
}

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

/// Sign of the cross product (q - p) x (r - p).
int orientation(const PlanarPoint& p, const PlanarPoint& q, const PlanarPoint& r) {
  const Rational cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sign(cross);
}

bool on_segment(const PlanarPoint& p, const PlanarPoint& q, const PlanarPoint& g) {
  return orientation(p, q, g) == 0 && std::min(p.x, q.x) <= g.x &&
         g.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= g.y && g.y <= std::max(p.y, q.y);
}

/// Closed triangle membership; false for degenerate triangles.
bool in_triangle(const PlanarPoint& p, const PlanarPoint& q, const PlanarPoint& r,
                 const PlanarPoint& g) {
  const int o = orientation(p, q, r);
  if (o == 0) return false;
  const int a = orientation(p, q, g);
  const int b = orientation(q, r, g);
  const int c = orientation(r, p, g);
  return a * o >= 0 && b * o >= 0 && c * o >= 0;
}

}  // namespace

std::vector<PlanarPoint> parse_points(std::string_view text) {
  std::vector<PlanarPoint> points;
  std::size_t line_no = 0;
  for (const auto& tokens : tokenized_lines(text)) {
    ++line_no;
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      throw InputError("points line " + std::to_string(line_no) + ": expected 'name x y'");
    }
    if (!is_valid_token(tokens[0])) {
      throw InputError("points line " + std::to_string(line_no) + ": invalid name '" +
                       tokens[0] + "'");
    }
    points.push_back({tokens[0], parse_rational(tokens[1], line_no),
                      parse_rational(tokens[2], line_no)});
  }
  return points;
}

ClosureSystem affine_2d(std::span<const PlanarPoint> input, std::size_t cap) {
  if (input.size() > cap) throw CapExceeded("affine geometry construction", input.size(), cap);
  std::vector<std::string> names;
  for (const auto& p : input) names.push_back(p.name);
  GroundSet ground(names);
  if (ground.size() != input.size()) throw InputError("duplicate point names");

  std::vector<PlanarPoint> pts(input.size());
  for (const auto& p : input) pts[ground.index_of(p.name)] = p;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i].x == pts[j].x && pts[i].y == pts[j].y) {
        throw InputError("points '" + pts[i].name + "' and '" + pts[j].name + "' coincide");
      }
    }
  }

  // In the plane every hull member lies in a segment or triangle spanned by
  // the generating points, so these implications define the geometry.
  const std::size_t n = pts.size();
  Basis hull_implications;
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (p == g || q == g) continue;
        if (on_segment(pts[p], pts[q], pts[g])) {
          hull_implications.push_back({ElementSet::singleton(p).with(q), ElementSet::singleton(g)});
        }
        for (std::size_t r = q + 1; r < n; ++r) {
          if (r == g) continue;
          if (in_triangle(pts[p], pts[q], pts[r], pts[g])) {
            hull_implications.push_back(
                {ElementSet::singleton(p).with(q).with(r), ElementSet::singleton(g)});
          }
        }
      }
    }
  }
  const ClosureSystem hull(ground, std::move(hull_implications), std::max(cap, kDefaultCap));
  return ClosureSystem(ground, canonical_basis(hull).implications, cap);
}

ClosureSystem order_convex_basis(const Poset& poset) {
  Basis basis;
  for (const auto& [x, y] : poset.strict_pairs()) {
    const ElementSet interior = poset.open_interval(x, y);
    if (!interior.empty()) basis.push_back({ElementSet::singleton(x).with(y), interior});
  }
  return ClosureSystem(poset.ground(), std::move(basis));
}

MeetTable MeetTable::from_entries(std::span<const std::array<std::string, 3>> entries) {
  std::vector<std::string> names;
  for (const auto& e : entries) names.insert(names.end(), e.begin(), e.end());
  MeetTable t;
  t.ground_ = GroundSet(names);
  const std::size_t n = t.ground_.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  t.table_.assign(n, std::vector<std::size_t>(n, unset));
  auto assign = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (t.table_[a][b] != unset && t.table_[a][b] != c) {
      throw InputError("conflicting meets for " + t.ground_.name(a) + " ^ " + t.ground_.name(b));
    }
    t.table_[a][b] = c;
  };
  for (const auto& [a, b, c] : entries) {
    const std::size_t ia = t.ground_.index_of(a);
    const std::size_t ib = t.ground_.index_of(b);
    const std::size_t ic = t.ground_.index_of(c);
    assign(ia, ib, ic);
    assign(ib, ia, ic);
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (t.table_[a][a] == unset) t.table_[a][a] = a;
    if (t.table_[a][a] != a) {
      throw InputError("meet is not idempotent at " + t.ground_.name(a));
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (t.table_[a][b] == unset) {
        throw InputError("meet table has no entry for " + t.ground_.name(a) + " ^ " +
                         t.ground_.name(b));
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (t.table_[t.table_[a][b]][c] != t.table_[a][t.table_[b][c]]) {
          throw InputError("meet is not associative on (" + t.ground_.name(a) + ", " +
                           t.ground_.name(b) + ", " + t.ground_.name(c) + ")");
        }
      }
    }
  }
  return t;
}

MeetTable parse_meet_table(std::string_view text) {
  std::vector<std::array<std::string, 3>> entries;
  std::size_t line_no = 0;
  for (const auto& tokens : tokenized_lines(text)) {
    ++line_no;
    if (tokens.empty()) continue;
    if (tokens.size() != 5 || tokens[1] != "^" || tokens[3] != "=") {
      throw InputError("meets line " + std::to_string(line_no) + ": expected 'a ^ b = c'");
    }
    for (std::size_t i : {0, 2, 4}) {
      if (!is_valid_token(tokens[i])) {
        throw InputError("meets line " + std::to_string(line_no) + ": invalid name '" +
                         tokens[i] + "'");
      }
    }
    entries.push_back({tokens[0], tokens[2], tokens[4]});
  }
  return MeetTable::from_entries(entries);
}

ClosureSystem subsemilattice_basis(const MeetTable& meets) {
  const std::size_t n = meets.ground().size();
  Basis basis;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::size_t c = meets.meet(a, b);
      if (c != a && c != b) basis.push_back({ElementSet::singleton(a).with(b), ElementSet::singleton(c)});
    }
  }
  return ClosureSystem(meets.ground(), std::move(basis));
}

ClosureSystem suborder_basis(const Poset& poset) {
  const auto pairs = poset.strict_pairs();
  std::vector<std::string> names;
  for (const auto& [x, y] : pairs) {
    names.push_back(poset.ground().name(x) + "_" + poset.ground().name(y));
  }
  GroundSet ground(names);
  if (ground.size() != pairs.size()) {
    throw InputError("suborder element names collide; avoid '_' in poset element names");
  }
  auto id = [&](std::size_t x, std::size_t y) {
    return ground.index_of(poset.ground().name(x) + "_" + poset.ground().name(y));
  };
  Basis basis;
  for (const auto& [x, y] : pairs) {
    for (std::size_t z : poset.above(y)) {
      basis.push_back({ElementSet::singleton(id(x, y)).with(id(y, z)),
                       ElementSet::singleton(id(x, z))});
    }
  }
  return ClosureSystem(std::move(ground), std::move(basis));
}

CqReport cq_check(std::span<const Implication> basis, std::size_t ground_size) {
  std::vector<ElementSet> reach(ground_size);
  for (const auto& imp : basis) {
    for (std::size_t x : imp.premise) reach[x] |= imp.conclusion;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < ground_size; ++x) {
      ElementSet next = reach[x];
      for (std::size_t y : reach[x]) next |= reach[y];
      if (next != reach[x]) {
        reach[x] = next;
        changed = true;
      }
    }
  }
  std::vector<ElementSet> component(ground_size);
  for (std::size_t b = 0; b < ground_size; ++b) {
    component[b] = ElementSet::singleton(b);
    for (std::size_t c : reach[b]) {
      if (reach[c].contains(b)) component[b].insert(c);
    }
  }

  CqReport report;
  for (std::size_t b = 0; b < ground_size; ++b) {
    if (component[b].size() > 1 && component[b].lowest() == b) {
      report.components.push_back(component[b]);
    }
  }
  for (std::size_t i = 0; i < basis.size() && report.holds; ++i) {
    for (std::size_t b : basis[i].conclusion) {
      if ((basis[i].premise & component[b]).size() > 1) {
        report.holds = false;
        report.witness = CqWitness{i, b, component[b]};
        break;
      }
    }
  }
  return report;
}

}  // namespace convexgeo
