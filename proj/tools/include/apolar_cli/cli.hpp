#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace apolar::cli {

/// Runs one command. `args` excludes the program name. Returns 0 on success
/// and 2 on usage or input errors, which are reported on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apolar::cli
