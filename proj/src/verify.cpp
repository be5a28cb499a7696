#include "condorcet/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "condorcet/simkit.hpp"

namespace condorcet {

bool VerificationSummary::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

class Check {
public:
    Check(std::string name, double tolerance) {
        result_.name = std::move(name);
        result_.tolerance = tolerance;
    }

    /// Records an error magnitude; fails when it exceeds the tolerance.
    void error(double e) {
        ++result_.cases;
        if (!(e <= result_.tolerance)) ++result_.failures;
        if (std::isnan(e)) e = INFINITY;
        result_.max_error = std::max(result_.max_error, e);
    }

    /// Records a boolean predicate; `shortfall` is how far it missed (0 if held).
    void expect(bool ok, double shortfall = 0.0) {
        ++result_.cases;
        if (!ok) {
            ++result_.failures;
            result_.max_error = std::max(result_.max_error, std::abs(shortfall));
        }
    }

    CheckResult finish() {
        result_.passed = result_.failures == 0;
        return result_;
    }

private:
    CheckResult result_;
};

}  // namespace

VerificationSummary run_verification(const VerifyOptions& options, const Calculators& calc) {
    if (options.n_max < 1 || options.n_max % 2 == 0) {
        throw DomainError("n-max must be a positive odd integer (got " + std::to_string(options.n_max) + ")");
    }
    if (options.p_grid.empty()) throw DomainError("p grid must not be empty");
    for (double p : options.p_grid) {
        if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0, 1] (got " + std::to_string(p) + ")");
    }
    if (options.trials < 0) throw DomainError("trials must be non-negative");

    Check brute("exact_vs_brute_force", kOracleTolerance);
    Check recursion("recursive_vs_exact", kRecursionTolerance);
    Check delta("recursion_delta_consistency", kOracleTolerance);
    Check monotone("monotonicity", 0.0);
    Check symmetry("complement_symmetry", kOracleTolerance);
    Check floor("floor_at_p", 0.0);
    Check dominance("chebyshev_dominance", 0.0);
    Check fixed("degenerate_fixed_points", 0.0);
    Check coverage("simulation_wilson_coverage", 0.0);

    std::uint64_t cell = 0;
    for (double p : options.p_grid) {
        for (std::int64_t n = 1; n <= options.n_max; n += 2) {
            const EnsembleConfig cfg(n, p);
            const CorrectnessProbability exact = calc.exact(cfg);

            if (n <= kBruteForceMaxN) brute.error(std::abs(exact.value - calc.brute_force(cfg).value));
            recursion.error(std::abs(calc.recursive(cfg).value - exact.value));
            symmetry.error(std::abs(exact.value + calc.exact(EnsembleConfig(n, 1.0 - p)).value - 1.0));

            if (n + 2 <= options.n_max) {
                const double step = increase(exact, calc.exact(EnsembleConfig(n + 2, p)));
                delta.error(std::abs(step - calc.delta(cfg)));
                if (p > 0.5 && p < 1.0) monotone.expect(step > 0.0, step);
            }
            if (p >= 0.5) {
                // exp(log p) may land one ulp below p at n = 1.
                floor.expect(exact.value >= p * (1.0 - 4e-16), p - exact.value);
            }
            if (p > 0.5) {
                const BoundResult bound = chebyshev_lower_bound(cfg);
                dominance.expect(bound.lower <= exact.value, bound.lower - exact.value);
            }
            if (options.trials > 0) {
                const SimulationReport sim =
                    simulate_ensemble(cfg, options.trials, derive_seed(options.seed, cell), options.z);
                const bool inside = sim.ci_low <= exact.value && exact.value <= sim.ci_high;
                coverage.expect(inside, inside ? 0.0 : std::min(std::abs(exact.value - sim.ci_low),
                                                                std::abs(exact.value - sim.ci_high)));
            }
            ++cell;
        }
    }

    for (std::int64_t n = 1; n <= options.n_max; n += 2) {
        fixed.error(std::abs(calc.exact(EnsembleConfig(n, 0.5)).value - 0.5));
        fixed.error(std::abs(calc.exact(EnsembleConfig(n, 1.0)).value - 1.0));
        fixed.error(std::abs(calc.exact(EnsembleConfig(n, 0.0)).value));
    }

    VerificationSummary summary;
    summary.checks = {brute.finish(),    recursion.finish(), delta.finish(),
                      monotone.finish(), symmetry.finish(),  floor.finish(),
                      dominance.finish(), fixed.finish()};
    if (options.trials > 0) summary.checks.push_back(coverage.finish());
    return summary;
}

}  // namespace condorcet
