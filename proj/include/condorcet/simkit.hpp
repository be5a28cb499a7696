#pragma once

#include <cstdint>
#include <random>

#include "condorcet/ensemble.hpp"

namespace condorcet {

/// Generator behind every simulation: the standard 64-bit Mersenne Twister,
/// whose output sequence is fixed by the C++ standard for a given seed.
using SimulationEngine = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform01(SimulationEngine& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

struct WilsonInterval {
    double low = 0.0;
    double high = 1.0;
};

struct SimulationReport {
    EnsembleConfig config{1, 0.5};
    std::int64_t trials = 0;
    std::int64_t successes = 0;
    double estimate = 0.0;
    double ci_low = 0.0;
    double ci_high = 1.0;
    double confidence_z = 0.0;
    std::uint64_t seed = 0;

    friend bool operator==(const SimulationReport&, const SimulationReport&) = default;
};

inline constexpr double kDefaultConfidenceZ = 1.96;

/// Wilson score interval for successes/trials, clipped to [0, 1].
WilsonInterval wilson_interval(std::int64_t successes, std::int64_t trials, double z);

/// Monte Carlo estimate of P(S_n > 0) with the true label fixed to +1.
/// Each classifier is correct when its uniform draw falls below p; draws are
/// consumed trial by trial, classifier by classifier.
SimulationReport simulate_ensemble(const EnsembleConfig& cfg, std::int64_t trials, std::uint64_t seed,
                                   double z = kDefaultConfidenceZ);

}  // namespace condorcet

namespace condorcet {

/// Seed for the index-th independent simulation in a batch (SplitMix64 of
/// base + index). Used wherever one base seed drives several simulations.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;

}  // namespace condorcet
