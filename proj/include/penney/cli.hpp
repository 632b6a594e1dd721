#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace penney::cli {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kSchema = "penney/1";

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
};

/// Runs `penney <args...>`; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace penney::cli
