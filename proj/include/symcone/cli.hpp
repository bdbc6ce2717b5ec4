#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symcone::cli {

// Exit codes: 0 success, 1 failed check or verdict, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symcone::cli
