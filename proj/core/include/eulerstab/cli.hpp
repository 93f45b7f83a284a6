#pragma once

#include <string>
#include <vector>

namespace eulerstab {

// Command line entry point; args excludes the program name. Exit codes:
// 0 success, 1 failed asserted checks or a gen method mismatch, 2 usage
// errors, 3 internal errors.
int run_cli(std::vector<std::string> args);

}  // namespace eulerstab
