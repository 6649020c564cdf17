#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hpdet::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInvalid = 2;
inline constexpr int kBudget = 3;

// Runs `hpdet args...` (args excludes the program name). The report goes to
// `out` in one write; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hpdet::cli
