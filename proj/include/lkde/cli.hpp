#pragma once

#include <iosfwd>

namespace lkde::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid_input = 2;
inline constexpr int exit_numerical_failure = 3;

/// Runs the `lkde` command line (estimate, synth, bench, eigs). Writes to
/// `out` when no --output file is given; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

} // namespace lkde::cli
