#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubegroup {

/// Runs the command-line interface. `args` excludes the program name.
/// Returns the process exit code: 0 success, 1 domain "no", 2 usage or
/// input error, 3 internal consistency failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubegroup
