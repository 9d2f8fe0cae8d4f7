#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperdyn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  ///< I/O errors, failed verification
inline constexpr int kExitUsage = 2;    ///< flag and config errors

/// Runs the command line `args` (without the program name).
///
/// Subcommands: mandelbrot, julia, classify, orbit, verify. Each accepts
/// `--config PATH` naming a file of `key = value` lines (`#` starts a
/// comment); keys are long flag names, and flags on the command line win
/// over file values. `--out -` writes the image to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperdyn::cli
