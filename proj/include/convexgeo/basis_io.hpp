#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "convexgeo/core.hpp"

namespace convexgeo {

/// Result of reading the basis text format.
struct ParsedBasis {
  GroundSet ground;
  Basis implications;
  std::vector<std::string> warnings;

  ClosureSystem system(std::size_t cap = kDefaultCap) const {
    return ClosureSystem(ground, implications, cap);
  }
};

/// Parses lines of the form `x y z -> u v`. `#` starts a comment, blank
/// lines are skipped, and `ground: a b c` widens the ground set beyond the
/// mentioned tokens. Duplicate tokens are merged, conclusion elements that
/// also occur in the premise are dropped, and an implication left with an
/// empty conclusion is discarded with a warning. Throws InputError with the
/// offending line number.
ParsedBasis parse_basis(std::string_view text);
ParsedBasis read_basis_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

/// `premise -> conclusion`, names separated by single spaces.
std::string format_implication(const GroundSet& ground, const Implication& imp);

/// One implication per line in basis order, no header or footer.
std::string format_basis(const GroundSet& ground, std::span<const Implication> basis);

/// `# s=.. sL=.. sR=.. count=..`
std::string format_stats_line(const BasisReport& report);

/// Basis file with a `# provenance:` header, a `ground:` line when some
/// element is not mentioned by any implication, and the stats footer.
std::string format_report(const GroundSet& ground, const BasisReport& report);

}  // namespace convexgeo
