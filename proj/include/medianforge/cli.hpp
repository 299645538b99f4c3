#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace medianforge::cli {

// Exit codes.
inline constexpr int kMedian = 0;
inline constexpr int kNotMedian = 2;
inline constexpr int kUndecided = 3;  // condition 1 unknown and oracle skipped
inline constexpr int kUsage = 64;
inline constexpr int kDataError = 65;
inline constexpr int kInternal = 70;
inline constexpr int kResource = 71;

/// Runs one command line (without the program name). Reports go to `out`
/// (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace medianforge::cli
