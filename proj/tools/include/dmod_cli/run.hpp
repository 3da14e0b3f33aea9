#pragma once

#include <iosfwd>

namespace dmod::cli {

/// Exit codes of the dmod command.
enum ExitCode : int { kSuccess = 0, kUserError = 1, kLimitReached = 2 };

/// Parses argv, runs the subcommand and writes text or JSON to `out`;
/// diagnostics go to `err`. `-f -` reads the polynomial list from `in`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dmod::cli
