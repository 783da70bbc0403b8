#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sheaflab::cli {

// Exit codes: 0 success, 1 invalid input, 2 usage error, 3 internal failure.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sheaflab::cli
