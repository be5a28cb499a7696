#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "condorcet/exactprob.hpp"

namespace condorcet {

/// The calculators a verification run cross-checks. Defaults to the library
/// implementations; tests substitute broken ones as negative controls.
struct Calculators {
    std::function<CorrectnessProbability(const EnsembleConfig&)> exact = exact_majority_prob;
    std::function<CorrectnessProbability(const EnsembleConfig&)> recursive = recursive_majority_prob;
    std::function<CorrectnessProbability(const EnsembleConfig&)> brute_force = brute_force_majority_prob;
    std::function<double(const EnsembleConfig&)> delta = recursion_delta;
};

struct VerifyOptions {
    std::int64_t n_max = 15;
    std::vector<double> p_grid{0.5, 0.6, 0.9};
    std::int64_t trials = 100'000;  ///< 0 skips the simulation check
    std::uint64_t seed = 1;
    double z = 4.0;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    double max_error = 0.0;
    double tolerance = 0.0;
    std::int64_t cases = 0;
    std::int64_t failures = 0;
};

struct VerificationSummary {
    std::vector<CheckResult> checks;
    bool passed() const;
};

inline constexpr double kOracleTolerance = 1e-12;
inline constexpr double kRecursionTolerance = 1e-10;

/// Runs every cross-check over odd n <= n_max and the p grid:
/// exact vs brute force, recursion vs exact, recursion increment, monotonicity,
/// complement symmetry, floor, Chebyshev dominance, degenerate fixed points
/// and simulation coverage by the z-Wilson interval.
/// Throws DomainError for an even or non-positive n_max or an empty/invalid grid.
VerificationSummary run_verification(const VerifyOptions& options, const Calculators& calc = {});

}  // namespace condorcet
