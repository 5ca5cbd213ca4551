#pragma once

#include <iosfwd>

namespace trapeze {

/// Entry point shared by the binary and the tests. Returns the process
/// exit code: 0 success, 1 verification failure, 2 usage or parse error.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace trapeze
