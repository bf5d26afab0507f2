#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leib {

// Runs one subcommand; args exclude the program name. Structured output
// (text, or JSON with --json) goes to out, usage errors to err.
// Exit codes: 0 success or property verified, 1 property fails or a typed
// domain error (Lie instance, no matching row, irrational spectrum, ...),
// 2 parse or usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace leib
