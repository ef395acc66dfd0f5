#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gmconn {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitMismatch = 2;

// Runs the gmconn command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmconn
