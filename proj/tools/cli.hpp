#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace annulus::cli {

enum ExitCode : int {
    ok = 0,
    internal_error = 1,
    validation_error = 2,
    certificate_failed = 3,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// CSV number format: 17 significant digits, locale independent.
std::string format_double(double v);

}  // namespace annulus::cli
