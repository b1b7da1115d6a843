#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hilbeq::cli {

/// Exit codes of the hilbeq tool.
enum Exit : int {
  kOk = 0,
  kNotMember = 1,
  kInputError = 2,
  kInconsistent = 3,
};

/// Runs one command line (without the program name); JSON and tables go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilbeq::cli
