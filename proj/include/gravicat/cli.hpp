#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gravicat {

// Runs one CLI invocation. args excludes the program name. Returns 0 on
// success (JSON result on out), 1 on a domain error (JSON error object on
// out), 2 on a usage error (message on err).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gravicat
