#pragma once

#include <iosfwd>

namespace relkin::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kBadInput = 2,
    kNoConvergence = 3,
};

/// Entry point behind the `relkin` executable; `out` receives results
/// (unless --out is given) and `err` receives diagnostics.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace relkin::cli
