#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mukai_lab::cli {

// Dispatch one invocation. argv excludes the program name. Usage errors
// return 2; domain errors print a machine-readable error object and return
// 1; success prints the report and returns 0.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mukai_lab::cli
