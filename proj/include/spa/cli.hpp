#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spa {

/// Runs the command line `args` (program name excluded). Returns 0 on
/// success, 1 when the input fails validation, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace spa
