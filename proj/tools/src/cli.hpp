#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpdo::cli {

/// Exit codes of `factor`; the other subcommands use 0 and 1 (and 2 when
/// `verify` finds a difference).
enum ExitCode : int { Factored = 0, Usage = 1, ConditionsFail = 2, Degenerate = 3, UnsupportedRoot = 4 };

/// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lpdo::cli
