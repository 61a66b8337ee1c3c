#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lookahead::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolations = 2;

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on usage or model errors,
/// 2 when `verify` found instances above the bound.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lookahead::cli
