#pragma once

#include <string>
#include <vector>

namespace figura::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFailure = 3;

// Environment variable naming the default output format (text|json|csv).
inline constexpr const char* kFormatEnv = "FIGURA_OUTPUT_FORMAT";

// Hard cap on verify sweep bounds.
inline constexpr long kVerifyCap = 2000;

struct RunResult {
    int exit_code = kExitOk;
    std::string output;
    std::string diagnostics;
};

/// Runs one command; args exclude the program name. Never throws.
RunResult run(const std::vector<std::string>& args);

}  // namespace figura::cli
