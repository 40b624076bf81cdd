#include "convexgeo/basis_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace convexgeo {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_tokens(std::string_view s, std::size_t line_no) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) {
    if (!is_valid_token(tok)) {
      throw InputError("line " + std::to_string(line_no) + ": invalid token '" +
                       tok + "'");
    }
    tokens.push_back(tok);
  }
  return tokens;
}

struct RawImplication {
  std::set<std::string> premise;
  std::set<std::string> conclusion;
  std::size_t line = 0;
};

}  // namespace

ParsedBasis parse_basis(std::string_view text) {
  std::vector<RawImplication> raw;
  std::set<std::string> names;
  std::vector<std::string> warnings;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("ground:")) {
      for (auto& tok : split_tokens(line.substr(7), line_no)) names.insert(tok);
      continue;
    }

    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      throw InputError("line " + std::to_string(line_no) + ": expected '->'");
    }
    if (line.find("->", arrow + 2) != std::string_view::npos) {
      throw InputError("line " + std::to_string(line_no) + ": more than one '->'");
    }
    auto lhs = split_tokens(line.substr(0, arrow), line_no);
    auto rhs = split_tokens(line.substr(arrow + 2), line_no);
    if (lhs.empty()) {
      throw InputError("line " + std::to_string(line_no) +
                       ": empty premise (systems must be zero-closed)");
    }
    if (rhs.empty()) {
      throw InputError("line " + std::to_string(line_no) + ": empty conclusion");
    }
    RawImplication imp;
    imp.line = line_no;
    imp.premise.insert(lhs.begin(), lhs.end());
    for (auto& tok : rhs) {
      names.insert(tok);
      if (!imp.premise.count(tok)) imp.conclusion.insert(tok);
    }
    names.insert(lhs.begin(), lhs.end());
    if (imp.conclusion.empty()) {
      warnings.push_back("line " + std::to_string(line_no) +
                         ": conclusion is contained in the premise; implication discarded");
      continue;
    }
    raw.push_back(std::move(imp));
  }

  ParsedBasis parsed;
  parsed.ground = GroundSet(std::vector<std::string>(names.begin(), names.end()));
  for (const auto& r : raw) {
    Implication imp;
    for (const auto& n : r.premise) imp.premise.insert(parsed.ground.index_of(n));
    for (const auto& n : r.conclusion) imp.conclusion.insert(parsed.ground.index_of(n));
    parsed.implications.push_back(imp);
  }
  normalize(parsed.implications);
  parsed.warnings = std::move(warnings);
  return parsed;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ParsedBasis read_basis_file(const std::filesystem::path& path) {
  try {
    return parse_basis(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string format_implication(const GroundSet& ground, const Implication& imp) {
  return ground.format(imp.premise) + " -> " + ground.format(imp.conclusion);
}

std::string format_basis(const GroundSet& ground, std::span<const Implication> basis) {
  std::string out;
  for (const auto& imp : basis) {
    out += format_implication(ground, imp);
    out += '\n';
  }
  return out;
}

std::string format_stats_line(const BasisReport& report) {
  return "# s=" + std::to_string(report.s) + " sL=" + std::to_string(report.s_left) +
         " sR=" + std::to_string(report.s_right) +
         " count=" + std::to_string(report.count);
}

std::string format_report(const GroundSet& ground, const BasisReport& report) {
  std::string out = "# provenance: " + std::string(to_string(report.provenance)) + "\n";
  ElementSet mentioned;
  for (const auto& imp : report.implications) mentioned |= imp.premise | imp.conclusion;
  if (mentioned != ground.all()) out += "ground: " + ground.format(ground.all()) + "\n";
  out += format_basis(ground, report.implications);
  out += format_stats_line(report);
  out += '\n';
  return out;
}

}  // namespace convexgeo
