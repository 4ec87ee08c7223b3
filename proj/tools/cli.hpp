#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace semimod::cli {

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 when a law suite or the
/// corpus fails, 2 on usage or validation errors.
int exec_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semimod::cli
