#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace saddlelink {

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_violation = 2,
    exit_not_equivalent = 3,
    exit_boundary = 4,
};

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace saddlelink
