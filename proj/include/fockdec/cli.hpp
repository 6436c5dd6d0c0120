#pragma once

#include <ostream>

namespace fockdec {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitUsage = 2 };

/// Entry point of the `fockdec` tool with injectable streams. Subcommands:
/// decomp, bar, schaper, gram, verify. See README.md for flags.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace fockdec
