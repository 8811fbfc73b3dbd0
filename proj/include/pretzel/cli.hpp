#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace pretzel::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kValidationError = 2;

/// Runs one command line (without the program name). Results go to `out`;
/// validation failures print a one-line diagnostic to `err` and return 2.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pretzel::cli
