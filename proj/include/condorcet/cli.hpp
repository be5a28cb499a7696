#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "condorcet/verify.hpp"

namespace condorcet::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 2,
    kHypothesisViolation = 3,
    kVerificationFailure = 4,
};

/// Runs the condorcet-kit command line. `args` excludes the program name.
/// `calc` is forwarded to `verify`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Calculators& calc = {});

/// printf("%.17g"), the lossless representation used in CSV output.
std::string format_lossless(double x);

}  // namespace condorcet::cli
