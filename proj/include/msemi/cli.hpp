#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace msemi::cli {

// Exit codes: 0 success / property holds, 1 property check failed (witness
// printed), 2 malformed input or bad arguments, 3 resource budget exceeded.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace msemi::cli
