#ifndef WEYLMULT_CLI_HPP
#define WEYLMULT_CLI_HPP

#include <iosfwd>

namespace weylmult::cli {

// Exit codes: 0 success, 1 verification mismatch, 2 bad arguments,
// 3 resource cap exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitBadArgs = 2;
inline constexpr int kExitResource = 3;

/// Parses argv, dispatches one subcommand (dim, mult, branch, basis, char,
/// expand, verify), writes results to `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weylmult::cli

#endif
