#pragma once

#include <ostream>

namespace spw {

/// Entry point of the `spw` tool. Exit codes: 0 success, 1 mathematical
/// failure, 2 usage, I/O or parse failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spw
