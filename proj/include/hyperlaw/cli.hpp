#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperlaw {

// Runs one command line (without the program name). Returns the process
// exit code: 0 on success, 1 when --fail-on-counterexample is set and a
// counterexample was reported, 2 on usage, parse or input errors.
int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err);

}  // namespace hyperlaw
