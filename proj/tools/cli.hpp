#ifndef POSETCUT_TOOLS_CLI_HPP
#define POSETCUT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace posetcut::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 2;
inline constexpr int kNotAPoset = 3;
inline constexpr int kAssertionFailed = 4;
inline constexpr int kOracleGuard = 5;

// Default seed for `bench` and `gen random:...` when --seed is absent.
inline constexpr const char* kSeedEnv = "POSETCUT_SEED";

/// Runs `posetcut <args...>`; args excludes the program name. `in` backs the
/// `-` input.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace posetcut::cli

#endif  // POSETCUT_TOOLS_CLI_HPP
