#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace involute::cli {

// Exit codes: 0 success, 2 validation or precondition failure, 1 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace involute::cli
