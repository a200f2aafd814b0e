#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lamlab {

// Runs one lamlab command. args[0] is the program name.
// Exit codes: 0 success, 1 usage error, 2 domain error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lamlab
