#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sadic {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one CLI invocation. Reports go to `out`, usage problems to `err`.
/// Exit codes: 0 all checks passed, 1 a verified bound failed, 2 usage or
/// input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sadic
