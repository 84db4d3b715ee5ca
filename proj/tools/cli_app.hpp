#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace freelip::cli {

/// Runs one CLI invocation. argv excludes the program name. Exit codes:
/// 0 success, 1 domain error (structured error JSON on err), 2 I/O, parse
/// or usage errors.
int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err);

}  // namespace freelip::cli
