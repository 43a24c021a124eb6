#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace pcpt::cli {

enum ExitCode : int { exit_pass = 0, exit_failure = 1, exit_invalid = 2 };

// args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pcpt::cli
