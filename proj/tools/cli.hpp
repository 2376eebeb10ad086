#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seashell::cli {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitPropertyFailed = 1,
    kExitUsage = 2,
    kExitIo = 3,
};

struct RunOptions {
    /// Colour the "error:" prefix of diagnostics.
    bool color{false};
};

/// Entry point for `seashell <subcommand> ...`; `args` excludes the program
/// name. Results go to `out`, diagnostics to `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunOptions& opts = {});

}  // namespace seashell::cli
