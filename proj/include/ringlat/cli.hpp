#pragma once

#include <iosfwd>

namespace ringlat {

// Entry point shared by the binary and the tests. Exit codes: 0 pass,
// 1 property or expectation failure, 2 invalid input.
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace ringlat
