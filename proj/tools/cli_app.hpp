#pragma once

#include <iosfwd>

namespace gromov::cli {

/// Parses argv, dispatches to the library, and writes results to `out` and
/// diagnostics to `err`. Returns 0 on success, 1 when an input file fails to
/// parse or validate, 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gromov::cli
