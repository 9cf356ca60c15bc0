#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; `in` feeds the render subcommand.
///
/// Exit codes: 0 success, 1 an identity failed verification (or a search
/// or construction produced nothing valid), 2 usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ramid::cli
