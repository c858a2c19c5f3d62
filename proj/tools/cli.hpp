#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace doob::cli {

enum ExitCode : int {
    success = 0,
    failure = 1,
    guard_exceeded = 2,
    parse_failure = 3,
    internal_inconsistency = 4,
};

/// Runs the command line `args` (without the program name).
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

}
