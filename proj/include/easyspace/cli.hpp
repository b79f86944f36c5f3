#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace easyspace {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_input_error = 1, exit_verification_failed = 2 };

/// Runs one command. `args` excludes the program name. The single JSON (or
/// CSV) document goes to `out`; usage and diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace easyspace
