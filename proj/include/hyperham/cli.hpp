#pragma once

#include <iosfwd>

namespace hyperham {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitImpossible = 3;  // also: not Hamiltonian
inline constexpr int kExitNotLaceable = 4;
inline constexpr int kExitVerifyFailed = 5;
inline constexpr int kExitBudget = 6;
inline constexpr int kExitUndetermined = 7;

/// Runs the tool with the given arguments (argv[0] is the program name).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperham
