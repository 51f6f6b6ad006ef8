#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spanmet {

// Runs one CLI invocation. args excludes the program name. Exit codes:
// 0 the queried property holds, 1 it fails (witness in the output),
// 2 input or usage error, 70 broken internal invariant.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace spanmet
