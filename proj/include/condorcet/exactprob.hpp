#pragma once

#include <cstdint>

#include "condorcet/ensemble.hpp"
#include "condorcet/numeric.hpp"

namespace condorcet {

/// Largest ensemble the exhaustive oracle will enumerate (2^25 outcomes).
inline constexpr std::int64_t kBruteForceMaxN = 25;

/// Chebyshev lower bound 1 - alpha/n on P(S_n > 0), with
/// alpha = 4p(1-p) / (2p-1)^2. Not clamped: small n gives negative values.
struct BoundResult {
    double lower = 0.0;
    double alpha = 0.0;
    std::int64_t n = 1;
    double mean = 0.0;      ///< E[S_n] = n(2p-1)
    double variance = 0.0;  ///< Var[S_n] = 4np(1-p)
};

/// Truncated evaluation of p + sum_{k>=0} C(2k+1,k) (p(1-p))^{k+1} (2p-1).
struct SeriesEvaluation {
    double partial_sum = 0.0;  ///< p + series_sum
    double series_sum = 0.0;   ///< the summation alone; converges to 1 - p
    std::int64_t terms_used = 0;
    double tail_bound = 0.0;   ///< upper bound on the omitted terms
    double target = 1.0;
};

/// P(S_n > 0) as the binomial upper tail sum_{k>m} C(n,k) p^k (1-p)^(n-k).
/// Terms are evaluated in log space and summed smallest first.
CorrectnessProbability exact_majority_prob(const EnsembleConfig& cfg);

/// P(S_{n+2} > 0) - P(S_n > 0) = C(n,m) p^(m+1) (1-p)^(m+1) (2p-1).
double recursion_delta(const EnsembleConfig& cfg);

/// P(S_n > 0) obtained by growing the ensemble two classifiers at a time
/// from P(S_1 > 0) = p.
CorrectnessProbability recursive_majority_prob(const EnsembleConfig& cfg);

/// Requires p > 1/2.
BoundResult chebyshev_lower_bound(const EnsembleConfig& cfg);

/// Sums the recursion increments until the geometric tail bound
/// term_M * r / (1 - r), r = 4p(1-p), drops to `tolerance`.
/// Requires 1/2 < p <= 1 and tolerance > 0.
SeriesEvaluation lemma1_partial_sum(double p, double tolerance);

/// Enumerates all 2^n joint outcomes. Test oracle; n <= kBruteForceMaxN.
CorrectnessProbability brute_force_majority_prob(const EnsembleConfig& cfg);

}  // namespace condorcet
