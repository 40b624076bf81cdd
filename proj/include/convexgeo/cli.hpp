#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace convexgeo::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kDomainError = 2,
  kCapExceeded = 3,
  kInternalError = 4,
};

/// Runs one command. `args[0]` is the program name. Results go to `out`,
/// diagnostics and warnings to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace convexgeo::cli
