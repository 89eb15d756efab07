#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace syzmirror {

// Exit codes of the command-line driver.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

// Runs one command line (args[0] is the program name). Documents go to --out
// when given, otherwise to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace syzmirror
