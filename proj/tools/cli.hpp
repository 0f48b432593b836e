#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace packsep::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kValidationFailure = 2,
    kVerificationFailure = 3,
};

/// Runs one packsep command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace packsep::cli
