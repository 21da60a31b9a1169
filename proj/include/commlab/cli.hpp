#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace commlab {

/// Runs the commlab command line (args exclude the program name).
/// Returns 0 when all checks pass, 1 when a check fails or is inconclusive,
/// 2 on usage or configuration errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace commlab
