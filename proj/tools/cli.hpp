#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace nhs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitVerifyFailed = 2;

/// Runs the nhscat command line. args[0] is the program name.
///
/// Exit codes: 0 success, 1 parse or validation error, 2 a verify suite failed.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace nhs::cli
