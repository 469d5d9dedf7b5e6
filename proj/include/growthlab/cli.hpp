#pragma once

#include <ostream>

namespace growthlab {

enum ExitCode : int { kExitOk = 0, kExitVerificationFailure = 1, kExitUsage = 2, kExitCapacity = 3 };

/// Parses argv (argv[0] is the program name), runs one subcommand and writes
/// a single JSON document or CSV table to `out`; diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace growthlab
