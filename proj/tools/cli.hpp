#pragma once

#include <iosfwd>

namespace dialg {

/// Command-line entry point. Exit codes: 0 success, 1 identity failure, 2 usage or I/O error.
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace dialg
