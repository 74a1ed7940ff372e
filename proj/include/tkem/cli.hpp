#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tkem {

/// Runs the command-line interface on `args` (program name excluded).
/// Returns the process exit code: 0 success, 1 domain error or failed
/// verification, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tkem
