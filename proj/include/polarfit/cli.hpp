#pragma once

#include <string>
#include <vector>

namespace polarfit::cli {

/// Runs the command line given the argument list (program name excluded).
/// Returns 0 on success, 1 on input or usage errors, 2 when the demo
/// self-check detects a numerical regression.
int run(const std::vector<std::string>& args);

}  // namespace polarfit::cli
