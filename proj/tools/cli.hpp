// Command-line front end; kept out of main() so tests can drive it.

#ifndef LORDER_TOOLS_CLI_HPP
#define LORDER_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lorder::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lorder::cli

#endif  // LORDER_TOOLS_CLI_HPP
