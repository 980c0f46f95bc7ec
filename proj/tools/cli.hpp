#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace shapebasis::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// unless --out is given; diagnostics and warnings go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shapebasis::cli
