#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace dynchrome {

// Command-line entry point, callable in-process for tests. args excludes the program
// name. Exit codes: 0 success, 2 bad input, 3 budget/resource exhaustion, 4 internal
// consistency failure.
int run_command(const std::vector<std::string>& args, std::ostream& out = std::cout,
                std::ostream& err = std::cerr);

}  // namespace dynchrome
