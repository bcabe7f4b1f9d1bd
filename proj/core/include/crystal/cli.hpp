#pragma once

// Command-line surface. Subcommands: graph, member, map, dim, verify.
// Exit codes: 0 success (member for `member`), 1 non-member or failed
// verification, 2 parse/configuration error, 3 node limit exceeded.

#include <iosfwd>
#include <string>
#include <vector>

namespace crystal {

/// Runs the CLI on `args` (without the program name), writing results to
/// `out` and diagnostics to `err`; returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crystal
