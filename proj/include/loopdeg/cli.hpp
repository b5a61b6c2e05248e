#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loopdeg::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kInputError = 2;
inline constexpr int kBudget = 3;

/// Runs one command line (args[0] is the program name). Positional
/// inputs may be inline text, a file path, or "-" for `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace loopdeg::cli
