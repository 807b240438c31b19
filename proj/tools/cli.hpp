#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace anncoh::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNotEqual = 1;
inline constexpr int kInputError = 2;

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits a command line into arguments; single and double quotes group,
/// backslash escapes the next character.
std::vector<std::string> split_command_line(const std::string& line);

}  // namespace anncoh::cli
