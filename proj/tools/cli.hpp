#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace isgkit::cli {

/// Process exit codes of the isgkit tool.
enum ExitCode : int {
    kHolds = 0,
    kFails = 1,
    kUsage = 2,
    kHypothesisNotEstablished = 3,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isgkit::cli
