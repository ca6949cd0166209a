#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankclass::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the `rankclass` executable. Data goes to `out` (or the
/// --out file), diagnostics and run metadata to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankclass::cli
