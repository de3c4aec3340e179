#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diagnoscope {

/// Exit codes of the command-line tool.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int format = 2;
inline constexpr int cap = 3;
inline constexpr int verify_failed = 4;
}  // namespace exit_code

/// Runs the tool on `args` (without the program name). JSON and tables go to `out`, diagnostics to
/// `err`; `in` supplies input read from "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace diagnoscope
