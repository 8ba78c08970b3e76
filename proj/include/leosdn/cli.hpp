#pragma once

#include <string>
#include <vector>

namespace leosdn {

// Exit codes reported by run_cli. Usage, config, and infeasible-scenario
// problems are distinguishable from generic runtime failures.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConfig = 3;
inline constexpr int kExitInfeasible = 4;

// Full command-line entry point ("run" and "sweep" subcommands); args exclude
// the program name. Used by the binary's main() and by in-process tests.
int run_cli(const std::vector<std::string>& args);

}  // namespace leosdn
