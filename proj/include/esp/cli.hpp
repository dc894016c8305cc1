#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace esp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Exit statuses: 0 on
/// success, 1 when a theorem-violating finding is reported, 2 on usage or
/// input errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace esp::cli
