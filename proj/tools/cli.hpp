#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ktri::cli {

/// Exit codes. Verdict codes depend only on the logical answer.
inline constexpr int kOk = 0;        // proved / valid / defines / nothing found / all pass
inline constexpr int kNegative = 1;  // refuted / invalid / countermodel or separator found / a check failed
inline constexpr int kError = 2;     // usage, parse, IO or bound error

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ktri::cli
