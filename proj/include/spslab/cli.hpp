#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spslab::cli {

/// Runs one spslab command. Returns the process exit code:
/// 0 success, 1 validation failure, 2 theorem counterexample found,
/// 3 usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace spslab::cli
