#pragma once

namespace qdc {

// Parse argv, dispatch to the library, print results.  Returns the process
// exit code: 0 success, 2 invalid input, 3 numerical failure.
int run_cli(int argc, const char* const* argv);

}  // namespace qdc
