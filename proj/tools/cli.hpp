#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kgwell::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_validation_failed = 1,
    exit_usage = 2,
    exit_accuracy = 3,
};

/// Runs one command. `args` excludes the program name. Artifacts go to the
/// file named by --output or to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Twelve significant digits, the format used for every number in CSV output.
std::string format_number(double x);

/// Value rounded to twelve significant digits (for JSON emission).
double round_sig12(double x);

} // namespace kgwell::cli
