#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hydromom::cli {

/// Runs the command line (args excludes the program name). Exit codes: 0 success,
/// 1 usage or input error, 2 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hydromom::cli
