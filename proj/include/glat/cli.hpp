#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace glat {

/// Exit codes: 0 success, 1 computation error or failed check, 2 input error.
/// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glat
