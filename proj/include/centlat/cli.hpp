#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace centlat {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInconsistent = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitIo = 74;

// Runs the centlat command line (args excludes the program name). Artifacts go
// to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace centlat
