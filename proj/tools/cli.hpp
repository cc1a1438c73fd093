#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cen::cli {

enum ExitCode : int {
  ok = 0,
  verification_failed = 1,
  parse_error = 2,
  limit_exceeded = 3,
  usage_error = 4,
};

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cen::cli
