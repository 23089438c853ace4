#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tablog {

// Exit codes shared by every command.
enum ExitCode : int { kExitYes = 0, kExitNo = 1, kExitError = 2 };

// Runs the command line `args` (without the program name). Results go to
// `out` as `key: value` lines; diagnostics go to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tablog
