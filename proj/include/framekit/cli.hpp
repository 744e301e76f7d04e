#pragma once

#include <iosfwd>

namespace framekit::cli {

/// Exit codes: 0 pass, 1 mathematical failure, 2 usage, I/O or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMath = 1;
inline constexpr int kExitIo = 2;

/// Entry point for the `framekit` tool (subcommands gen, verify, dilate, dual).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// --tolerance if given, else FRAMEKIT_TOLERANCE, else the library default.
double resolve_tolerance(double flag_value);

}  // namespace framekit::cli
