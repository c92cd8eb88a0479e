#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dskit::cli {

enum ExitCode : int {
  kOk = 0,
  kRelationFails = 1,
  kUsage = 2,
  kParse = 3,
  kPrecondition = 4,
  kResourceLimit = 5,
};

/// Runs the command line (without the program name). `in` is used when no
/// input file is given or the file is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dskit::cli
