#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace compid::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kPrecondition = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInternal = 3;

/// Runs one command line (without the program name). "-" as the model path
/// reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace compid::cli
