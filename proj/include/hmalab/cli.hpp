#pragma once

#include <ostream>

namespace hmalab {

enum ExitCode : int {
    exit_ok = 0,
    exit_inequivalent = 1,
    exit_parse_error = 2,
    exit_guard = 3,
    exit_depth = 4,
};

// Entry point of the `hmalab` command; writes results to out and diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hmalab
