#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace blanchfield::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kPropertyFailure = 1;
inline constexpr int kInputError = 2;

/// Runs the command line `args` (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blanchfield::cli
