#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sullivan::cli {

enum ExitCode : int {
    kOk = 0,
    kDomainError = 1,
    kInputError = 2,
    kCounterexample = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sullivan::cli
