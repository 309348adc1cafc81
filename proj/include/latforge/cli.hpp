#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latforge {

// Exit codes: 0 success, 1 usage or input error, 2 computation error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitComputation = 2;

// Entry point of the `latforge` tool. args[0] is the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);
int cli_main(int argc, char** argv);

}  // namespace latforge
