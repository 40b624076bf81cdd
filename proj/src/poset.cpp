#include "convexgeo/poset.hpp"

#include <sstream>

namespace convexgeo {

Poset Poset::from_pairs(std::vector<std::string> elements, std::span<const NamePair> less) {
  for (const auto& [a, b] : less) {
    elements.push_back(a);
    elements.push_back(b);
  }
  GroundSet ground(std::move(elements));
  std::vector<ElementSet> above(ground.size());
  for (const auto& [a, b] : less) above[ground.index_of(a)].insert(ground.index_of(b));
  return Poset(std::move(ground), std::move(above));
}

Poset::Poset(GroundSet ground, std::vector<ElementSet> above)
    : ground_(std::move(ground)), above_(std::move(above)) {
  const std::size_t n = ground_.size();
  if (above_.size() != n) throw InputError("poset relation size does not match the ground set");
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      ElementSet next = above_[a];
      for (std::size_t b : above_[a]) next |= above_[b];
      if (next != above_[a]) {
        above_[a] = next;
        changed = true;
      }
    }
  }
  below_.assign(n, ElementSet{});
  for (std::size_t a = 0; a < n; ++a) {
    if (above_[a].contains(a)) {
      throw InputError("order relation has a cycle through '" + ground_.name(a) + "'");
    }
    for (std::size_t b : above_[a]) below_[b].insert(a);
  }
}

ElementSet Poset::open_interval(std::size_t a, std::size_t b) const {
  if (!less(a, b)) return {};
  return above_[a] & below_[b];
}

bool Poset::covers(std::size_t upper, std::size_t lower) const {
  return less(lower, upper) && open_interval(lower, upper).empty();
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::strict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b : above_[a]) out.emplace_back(a, b);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::cover_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [a, b] : strict_pairs()) {
    if (covers(b, a)) out.emplace_back(a, b);
  }
  return out;
}

std::vector<ElementSet> Poset::components(ElementSet subset) const {
  std::vector<ElementSet> out;
  ElementSet remaining = subset;
  while (!remaining.empty()) {
    ElementSet comp = ElementSet::singleton(remaining.lowest());
    ElementSet frontier = comp;
    while (!frontier.empty()) {
      ElementSet next;
      for (std::size_t u : frontier) {
        for (std::size_t v : remaining) {
          if (!comp.contains(v) && (covers(u, v) || covers(v, u))) next.insert(v);
        }
      }
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    remaining -= comp;
  }
  return out;
}

Poset parse_poset(std::string_view text) {
  std::vector<std::string> elements;
  std::vector<Poset::NamePair> pairs;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (tokens.empty()) continue;
    auto bad = [&](const std::string& why) {
      return InputError("poset line " + std::to_string(line_no) + ": " + why);
    };
    for (std::size_t i = 0; i < tokens.size(); i += 2) {
      if (!is_valid_token(tokens[i])) throw bad("invalid element name '" + tokens[i] + "'");
    }
    if (tokens.size() == 1) {
      elements.push_back(tokens[0]);
    } else if (tokens.size() == 3 && tokens[1] == "<") {
      if (tokens[0] == tokens[2]) throw bad("'" + tokens[0] + " < " + tokens[0] + "' is reflexive");
      pairs.emplace_back(tokens[0], tokens[2]);
    } else {
      throw bad("expected 'a < b'");
    }
  }
  return Poset::from_pairs(std::move(elements), pairs);
}

}  // namespace convexgeo
