#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mtd::cli {

enum ExitCode : int {
    kOk = 0,
    kMismatch = 1,
    kUsage = 2,
    kIoError = 3,
};

/// Runs one command line; `args` excludes the program name. Results go to
/// files named by the flags, or to `out` when no file is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mtd::cli
