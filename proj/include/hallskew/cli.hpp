#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hallskew {

// Runs one command line (without the program name). The report goes to out as a
// single write; errors and usage go to err. Returns 0 when the command verified
// or constructed its result, 1 when a check came out false, 2 on errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hallskew
