#pragma once

#include <iosfwd>

namespace superpair::cli {

/// Runs the command line `argv` and returns the exit code: 0 when every reported
/// property holds, 1 on a property failure, 2 on unusable input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace superpair::cli
