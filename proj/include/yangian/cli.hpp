#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace yangian::cli {

/// Runs one command line (without the program name). Machine output goes to `out`,
/// diagnostics and usage to `err`. Returns 0 on success, 2 for an Unknown cyclicity
/// verdict and 1 on any error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace yangian::cli
