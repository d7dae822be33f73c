#pragma once

#include <iosfwd>

namespace qbarnes {

/// Runs one command-line job.  Returns 0 on success, 2 on a usage error and
/// 1 on a computation error; the document (or error report) goes to `out`,
/// usage diagnostics to `err`.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qbarnes
