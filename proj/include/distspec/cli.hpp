#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace distspec::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kSkippedInput = 2;
inline constexpr int kUsage = 64;
inline constexpr int kNoInput = 66;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string usage();

}  // namespace distspec::cli
