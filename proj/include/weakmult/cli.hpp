#pragma once

#include <string>
#include <vector>

namespace weakmult::cli {

/// Environment variable naming the default --out directory.
inline constexpr const char* kOutDirEnv = "WEAKMULT_OUT_DIR";

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnconverged = 2;
inline constexpr int kExitCheckFailed = 3;

/// Runs one subcommand; args[0] is the program name.
int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

}  // namespace weakmult::cli
