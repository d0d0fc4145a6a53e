#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace siladic {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failed = 1;
inline constexpr int inconclusive = 2;
inline constexpr int usage = 64;
inline constexpr int io = 74;
}  // namespace exit_code

/// Runs one command. `args` excludes the program name. Results go to `out` unless --out names a
/// file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace siladic
