#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace heiszeta::cli {

// Parses and executes one command line (without the program name).
// Exit codes: 0 success, 1 mathematical disagreement, 2 usage/input error,
// 3 resource guard.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heiszeta::cli
