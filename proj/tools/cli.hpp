#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace popbranch::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kNoneExists = 2;
inline constexpr int kAssumptionViolated = 3;
inline constexpr int kVerifyFailed = 4;
inline constexpr int kCapExceeded = 5;

// Runs one invocation; args excludes the program name. Machine output goes to
// `out`, diagnostics to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace popbranch::cli
