#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wcc::cli {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,  // usage or validation error, failed verification
  kIo = 2,
  kNotConnectable = 3,
};

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wcc::cli
