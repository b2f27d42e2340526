#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tqft {

/// Dispatch a full argv (without the program name).  Returns the process exit
/// code: 0 success, 2 validation/usage error (diagnostic on err), 1 internal
/// invariant violation (named on err).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tqft
