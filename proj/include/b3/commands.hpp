#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace b3 {

/// Dispatch one CLI invocation.  Exit codes: 0 success, 1 verification
/// failure, 2 usage or parse error, 3 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace b3
