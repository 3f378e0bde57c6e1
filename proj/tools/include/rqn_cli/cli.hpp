#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rqn::cli {

// Exit codes: 0 pass, 1 mathematical failure, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rqn::cli
