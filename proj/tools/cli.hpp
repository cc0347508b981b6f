#pragma once

#include <ostream>

namespace eoslab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitUsage = 64;

// Parses argv, runs one subcommand, writes records to out (or --output) and
// progress/diagnostics to err. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eoslab::cli
