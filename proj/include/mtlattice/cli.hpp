#pragma once

#include <string>
#include <vector>

namespace mtlat {

/// Runs the command-line tool. Exit codes: 0 success, 1 assertion or
/// violation failures, 2 malformed input.
int run_cli(const std::vector<std::string>& args);

}  // namespace mtlat
