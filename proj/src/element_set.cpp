#include "convexgeo/element_set.hpp"

namespace convexgeo {

bool lex_less(ElementSet a, ElementSet b) {
  const ElementSet diff = (a - b) | (b - a);
  if (diff.empty()) return false;
  const std::size_t d = diff.lowest();
  // The sequences agree below d. The one holding d wins unless the other
  // ends there (a proper prefix sorts first).
  const ElementSet above = ElementSet::from_bits(~((std::uint64_t{2} << d) - 1));
  if (a.contains(d)) return !(b & above).empty();
  return (a & above).empty();
}

bool size_lex_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

}  // namespace convexgeo
