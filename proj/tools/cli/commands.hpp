#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmetric::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the executable and the tests. Subcommands:
/// certify, verify, mk, embed, project, lipnorm. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmetric::cli
