#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rrbx::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitInput = 64;
inline constexpr int kExitInternal = 70;

/// Runs one command; `args` excludes the program name. The report goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rrbx::cli
