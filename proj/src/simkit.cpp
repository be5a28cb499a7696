#include "condorcet/simkit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace condorcet {

WilsonInterval wilson_interval(std::int64_t successes, std::int64_t trials, double z) {
    if (trials < 1) throw DomainError("trials must be positive");
    if (successes < 0 || successes > trials) {
        throw DomainError("successes must lie in [0, trials] (got " + std::to_string(successes) + " of " +
                          std::to_string(trials) + ")");
    }
    if (!(z >= 0.0)) throw DomainError("z must be non-negative");

    const double t = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / t;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / t;
    const double center = (phat + z2 / (2.0 * t)) / denom;
    const double half = z / denom * std::sqrt(phat * (1.0 - phat) / t + z2 / (4.0 * t * t));

    WilsonInterval ci;
    ci.low = std::clamp(center - half, 0.0, phat);
    ci.high = std::clamp(center + half, phat, 1.0);
    if (successes == 0) ci.low = 0.0;
    if (successes == trials) ci.high = 1.0;
    return ci;
}

SimulationReport simulate_ensemble(const EnsembleConfig& cfg, std::int64_t trials, std::uint64_t seed, double z) {
    if (trials < 1) throw DomainError("trials must be positive (got " + std::to_string(trials) + ")");

    SimulationEngine engine(seed);
    const double p = cfg.p();
    const std::int64_t n = cfg.n();
    std::int64_t successes = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        std::int64_t sum = 0;
        for (std::int64_t i = 0; i < n; ++i) {
            sum += uniform01(engine) < p ? 1 : -1;
        }
        if (sum > 0) ++successes;
    }

    SimulationReport report;
    report.config = cfg;
    report.trials = trials;
    report.successes = successes;
    report.estimate = static_cast<double>(successes) / static_cast<double>(trials);
    const WilsonInterval ci = wilson_interval(successes, trials, z);
    report.ci_low = ci.low;
    report.ci_high = ci.high;
    report.confidence_z = z;
    report.seed = seed;
    return report;
}

}  // namespace condorcet

namespace condorcet {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
    std::uint64_t z = base + index * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace condorcet
