#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcshane::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kValidationError = 1;
inline constexpr int kInvariantViolation = 2;

/// Runs one subcommand; args excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

/// Thread count: `requested` if positive, else MCSHANE_THREADS, else the
/// machine parallelism.
unsigned resolve_threads(int requested);

}  // namespace mcshane::cli
