#pragma once

#include <iosfwd>

namespace lb::cli {

/// Runs one command. JSON results go to `out`; errors are reported as JSON on
/// `out` as well, with usage messages on `err`. Returns 0 on success, 1 on a
/// domain error, 2 on a validation or axiom failure, 64 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lb::cli
