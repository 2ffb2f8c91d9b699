#pragma once

#include <iosfwd>

namespace shimura {

enum ExitCode : int { kExitPass = 0, kExitVerificationFailure = 1, kExitUsage = 2, kExitInternal = 3 };

/// Entry point of the command-line tool; never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace shimura
