#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "starslice/verify.hpp"

namespace starslice {

/// 0 all holds, 1 any holds-within-error, 2 any violated, 3 usage or config error.
int exit_code_for(const std::vector<VerificationReport>& reports);

/// Runs the command line `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starslice
