#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modcat::cli {

/// Runs one CLI invocation. `args` excludes the program name. Exit codes:
/// 0 = success / all checks pass, 1 = a verification check failed,
/// 2 = invalid input or flags.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace modcat::cli
