#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kstar::cli {

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
///
/// Exit codes: 0 everything passed (or the requested witness was found),
/// 1 a violation was found (or no witness exists), 2 usage or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kstar::cli
