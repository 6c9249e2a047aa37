#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace woundlab {

/// Runs the command-line interface. Exit codes: 0 success, 1 computation
/// error, 2 usage error, 3 verification failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace woundlab
