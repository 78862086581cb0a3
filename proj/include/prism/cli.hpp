#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace prism::cli {

/// Runs one `prism` invocation (args exclude the program name). Returns the
/// exit code: 0 success, 1 domain error, 2 usage or input-format error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prism::cli
