#pragma once

#include <ostream>

namespace dualbent::cli {

/// Exit codes: 0 pass, 1 verification failure, 2 invalid configuration.
enum ExitCode { kPass = 0, kVerifyFailed = 1, kInvalidConfig = 2 };

/// Runs one command line; everything goes to `out` / `err` so tests can
/// capture it.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dualbent::cli
