#pragma once

#include <string>
#include <vector>

namespace origami::cli {

// Command-line driver. `args` is the argument vector without the program
// name. Returns the process exit code: 0 success, 1 verification or runtime
// failure, 2 usage error.
int run(const std::vector<std::string>& args);

} // namespace origami::cli
