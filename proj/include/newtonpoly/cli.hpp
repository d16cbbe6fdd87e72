#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace newtonpoly::cli {

/// Exit statuses: success or Match, a Violated certificate or Mismatch, and
/// any error (usage, parse, arithmetic).
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNegative = 2;

/// Run the command line `args` (without the program name). Polynomial
/// arguments equal to "-" are read from `in`; "@path" reads a file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace newtonpoly::cli
