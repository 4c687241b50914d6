#pragma once

#include <iosfwd>

namespace gitfan::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kEmpty = 1, kSchema = 2 };

/// Runs one gitfan command. The result document (or an error object) goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace gitfan::cli
