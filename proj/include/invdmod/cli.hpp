#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace invdmod {

/// Entry point of the command-line tool. `args` excludes the program name.
/// Writes exactly one JSON report line to `out` (or CLI11 help text).
/// Returns 0 on success, 1 on domain errors, 2 on malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace invdmod
