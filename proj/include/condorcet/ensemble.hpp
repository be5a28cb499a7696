#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace condorcet {

/// Invalid argument or violated type invariant (even n, p outside [0,1], ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation that relies on a theorem hypothesis (typically p > 1/2) was
/// called outside of it. `condition()` names the hypothesis that failed.
class HypothesisViolation : public std::domain_error {
public:
    HypothesisViolation(std::string condition, const std::string& what)
        : std::domain_error(what), condition_(std::move(condition)) {}

    const std::string& condition() const noexcept { return condition_; }

private:
    std::string condition_;
};

/// Input too large for an exhaustive computation.
class ResourceGuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Ensemble of n = 2m+1 independent binary classifiers, each correct with
/// probability p.
class EnsembleConfig {
public:
    EnsembleConfig(std::int64_t n, double p);

    std::int64_t n() const noexcept { return n_; }
    double p() const noexcept { return p_; }
    std::int64_t m() const noexcept { return (n_ - 1) / 2; }

    /// Throws HypothesisViolation("p > 1/2") unless p > 1/2.
    void require_better_than_chance() const;

    friend bool operator==(const EnsembleConfig&, const EnsembleConfig&) = default;

private:
    std::int64_t n_;
    double p_;
};

enum class Method { Exact, Recursive, ChebyshevBound, SeriesPartial, MonteCarlo, BruteForce };

std::string_view to_string(Method method) noexcept;

/// Probability that the majority vote is correct, tagged with how it was
/// obtained.
///
/// `complement` holds 1 - value. For Exact and BruteForce it is summed
/// directly from the losing tail, so it keeps full relative precision when
/// `value` has already rounded to 1.0.
struct CorrectnessProbability {
    double value = 0.0;
    double complement = 1.0;
    Method method = Method::Exact;
    /// Set when floating drift pushed a result outside [0,1] and it was clamped.
    bool clamped = false;
};

/// P(b) - P(a) computed on whichever side of 1/2 keeps precision.
double increase(const CorrectnessProbability& a, const CorrectnessProbability& b) noexcept;

}  // namespace condorcet
