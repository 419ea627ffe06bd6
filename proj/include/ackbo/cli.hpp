#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ackbo::cli {

/// Runs the command line (without the program name). Returns 0 when the
/// requested orientation or comparison holds, 1 when it does not, and 2 on
/// usage, parse or parameter errors.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace ackbo::cli
