#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padival::cli {

inline constexpr int exit_ok = 0;
/// A verify sweep found at least one identity failure.
inline constexpr int exit_verify_failure = 1;
/// Bad invocation: unknown target, non-prime p, malformed range, ...
inline constexpr int exit_usage = 2;
/// An exact-division assertion tripped inside the library.
inline constexpr int exit_inconsistency = 3;

/// Runs one CLI invocation. `args` excludes the program name. Data goes
/// to `out`; diagnostics (errors, elapsed times) go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace padival::cli
