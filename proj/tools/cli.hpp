#pragma once

// The rcat command line, callable in-process.  Exit codes: 0 pass, 1 law
// failure or truncated check, 2 malformed input or usage error.

#include <ostream>
#include <string>
#include <vector>

namespace rcat::cli {

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcat::cli
