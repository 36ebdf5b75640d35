#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wavecas::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical
/// failure.  `out` receives the requested table or report, `err` diagnostics.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wavecas::cli
