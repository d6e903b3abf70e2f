#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dpc {

// Exit codes: 0 answered, 1 verification failure, 2 usage, parse or budget error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dpc
