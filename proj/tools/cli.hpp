#pragma once

#include <iosfwd>

namespace spherical::cli {

/// Runs the `spherical` command line. Normal output goes to `out` and is only
/// written when the verb succeeds; diagnostics go to `err`.
///
/// Exit status: 0 success (classify: spherical), 1 negative result
/// (classify: not spherical, crosscheck: disagreements found), 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spherical::cli
