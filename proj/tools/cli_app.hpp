#pragma once

#include <iosfwd>

namespace hsdirac::cli {

inline constexpr const char* kFormatVersion = "1";

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Parses argv (argv[0] is the program name), runs one subcommand and writes
/// the document to `out`, diagnostics to `err`. Returns the exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hsdirac::cli
