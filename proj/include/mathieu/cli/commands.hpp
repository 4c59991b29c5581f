#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mathieu::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // inequality failure or route deviation
inline constexpr int kExitUsage = 2;    // bad flags or a violated guard

/// Entry point of mathieu-kit. Results go to `out`, diagnostics and the
/// check summary (for csv/json) to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mathieu::cli
