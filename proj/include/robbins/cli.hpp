#pragma once

#include <iosfwd>

namespace robbins::cli {

/// Exit codes: 0 success, 1 numerical or I/O failure, 2 invalid arguments.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace robbins::cli
