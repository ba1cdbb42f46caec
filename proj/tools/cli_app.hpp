#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace umu::cli {

/// Runs one command line (args exclude the program name). Returns the exit
/// code: 0 success, 1 parse or validation error, 2 inconsistent extension.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace umu::cli
