#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace palper::cli {

// Runs one CLI invocation. args excludes the program name. Exit codes:
// 0 success, 1 a requested check failed, 2 usage error, 3 resource cap hit.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace palper::cli
