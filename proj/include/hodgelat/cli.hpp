#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hodgelat::cli {

// exit codes: 0 verdict produced, 2 domain rejection, 3 internal assertion
// failure, 64 usage error, 65 file or parse error
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitInternal = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;

// Dispatches one batch invocation. Standard output is always a single JSON
// document with sorted keys; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hodgelat::cli
