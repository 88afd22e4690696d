#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctxdl::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // violated, not entailed, no model, invalid annotation
inline constexpr int kUsage = 2;     // bad flags, unreadable or malformed input

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctxdl::cli
