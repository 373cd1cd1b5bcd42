#pragma once

#include <iosfwd>

namespace hyperrad::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNotConverged = 3;
inline constexpr int kExitViolations = 4;

/// Entry point of the `hyperrad` tool. Report text goes to `out` (or the
/// --out file); diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperrad::cli
