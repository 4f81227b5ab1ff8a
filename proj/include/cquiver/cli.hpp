#pragma once

#include <iosfwd>

namespace cquiver {

/// Entry point of the command-line tool. Exit codes: 0 success, 1 usage or
/// validation error, 2 verification failure or --expect mismatch.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cquiver
