#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ureq::cli {

/// Runs one subcommand. `args` excludes the program name. Returns the exit
/// code: 0 success (for `decide`: equal), 1 `decide` not equal or `verify`
/// found mismatches, 2 usage, input or budget errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace ureq::cli
