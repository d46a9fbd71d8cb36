#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zred::cli {

enum ExitCode : int {
    ok = 0,
    check_failed = 1,  // verify found counterexamples
    usage = 2,
    precondition = 3,
    internal = 4,
};

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zred::cli
