#include "condorcet/exactprob.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <vector>

namespace condorcet {

EnsembleConfig::EnsembleConfig(std::int64_t n, double p) : n_(n), p_(p) {
    if (n < 1) throw DomainError("n must be a positive odd integer (got " + std::to_string(n) + ")");
    if (n % 2 == 0) throw DomainError("n must be odd (got " + std::to_string(n) + ")");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0, 1] (got " + std::to_string(p) + ")");
}

void EnsembleConfig::require_better_than_chance() const {
    if (!(p_ > 0.5)) {
        throw HypothesisViolation("p > 1/2", "hypothesis violated: p > 1/2 required (got p=" +
                                                 std::to_string(p_) + ")");
    }
}

std::string_view to_string(Method method) noexcept {
    switch (method) {
        case Method::Exact: return "exact";
        case Method::Recursive: return "recursive";
        case Method::ChebyshevBound: return "chebyshev_bound";
        case Method::SeriesPartial: return "series_partial";
        case Method::MonteCarlo: return "monte_carlo";
        case Method::BruteForce: return "brute_force";
    }
    return "unknown";
}

double increase(const CorrectnessProbability& a, const CorrectnessProbability& b) noexcept {
    if (a.value > 0.5 && b.value > 0.5) return a.complement - b.complement;
    return b.value - a.value;
}

namespace {

double sum_ascending(std::vector<double>& terms) {
    std::sort(terms.begin(), terms.end());
    CompensatedSum sum;
    for (double t : terms) sum.add(t);
    return sum.value();
}

CorrectnessProbability clamp_to_unit(CorrectnessProbability prob) {
    if (prob.value < 0.0 || prob.value > 1.0) {
        prob.value = std::clamp(prob.value, 0.0, 1.0);
        prob.clamped = true;
    }
    return prob;
}

}  // namespace

CorrectnessProbability exact_majority_prob(const EnsembleConfig& cfg) {
    const double p = cfg.p();
    if (p == 0.0) return {0.0, 1.0, Method::Exact};
    if (p == 1.0) return {1.0, 0.0, Method::Exact};
    if (p == 0.5) return {0.5, 0.5, Method::Exact};

    const std::int64_t n = cfg.n();
    const std::int64_t m = cfg.m();
    const double log_p = std::log(p);
    const double log_q = std::log1p(-p);

    std::vector<double> winning;
    std::vector<double> losing;
    winning.reserve(static_cast<std::size_t>(n - m));
    losing.reserve(static_cast<std::size_t>(m + 1));
    for (std::int64_t k = 0; k <= n; ++k) {
        const double term = std::exp(log_binomial(n, k) + static_cast<double>(k) * log_p +
                                     static_cast<double>(n - k) * log_q);
        (k > m ? winning : losing).push_back(term);
    }
    const double win = sum_ascending(winning);
    const double lose = sum_ascending(losing);
    // Derive the larger tail from the smaller one: 1 - lose rounds once,
    // while the summed win can drift an ulp past 1.
    const double value = lose < win ? 1.0 - lose : win;
    return clamp_to_unit({value, lose, Method::Exact});
}

double recursion_delta(const EnsembleConfig& cfg) {
    const double p = cfg.p();
    if (p == 0.0 || p == 1.0 || p == 0.5) return 0.0;
    const std::int64_t m = cfg.m();
    const double log_pq = std::log(p) + std::log1p(-p);
    return std::exp(log_binomial(cfg.n(), m) + static_cast<double>(m + 1) * log_pq) * (2.0 * p - 1.0);
}

CorrectnessProbability recursive_majority_prob(const EnsembleConfig& cfg) {
    const double p = cfg.p();
    CompensatedSum sum;
    sum.add(p);
    for (std::int64_t k = 1; k < cfg.n(); k += 2) {
        sum.add(recursion_delta(EnsembleConfig(k, p)));
    }
    CorrectnessProbability prob{sum.value(), 0.0, Method::Recursive};
    prob = clamp_to_unit(prob);
    prob.complement = 1.0 - prob.value;
    return prob;
}

BoundResult chebyshev_lower_bound(const EnsembleConfig& cfg) {
    cfg.require_better_than_chance();
    const double p = cfg.p();
    const double n = static_cast<double>(cfg.n());
    const double bias = 2.0 * p - 1.0;
    BoundResult bound;
    bound.n = cfg.n();
    bound.alpha = 4.0 * p * (1.0 - p) / (bias * bias);
    bound.lower = 1.0 - bound.alpha / n;
    bound.mean = n * bias;
    bound.variance = 4.0 * n * p * (1.0 - p);
    return bound;
}

namespace {
constexpr std::int64_t kMaxSeriesTerms = 50'000'000;
}

SeriesEvaluation lemma1_partial_sum(double p, double tolerance) {
    if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
    if (!(p <= 1.0)) throw DomainError("p must lie in [0, 1]");
    if (!(p > 0.5)) {
        throw HypothesisViolation("p > 1/2", "hypothesis violated: p > 1/2 required for the series to converge (got p=" +
                                                 std::to_string(p) + ")");
    }

    SeriesEvaluation eval;
    if (p == 1.0) {
        eval.partial_sum = 1.0;
        eval.terms_used = 1;
        return eval;
    }

    const double bias = 2.0 * p - 1.0;
    const double log_x = std::log(p) + std::log1p(-p);
    const double log_bias = std::log(bias);
    // r / (1 - r) with r = 4p(1-p); note 1 - r = (2p-1)^2.
    const double tail_factor = 4.0 * p * (1.0 - p) / (bias * bias);

    CompensatedSum sum;
    for (std::int64_t k = 0;; ++k) {
        if (k == kMaxSeriesTerms) {
            throw ResourceGuardError("series did not reach the requested tolerance within " +
                                     std::to_string(kMaxSeriesTerms) + " terms");
        }
        const double term =
            std::exp(log_binomial(2 * k + 1, k) + static_cast<double>(k + 1) * log_x + log_bias);
        sum.add(term);
        const double tail = term * tail_factor;
        if (tail <= tolerance) {
            eval.terms_used = k + 1;
            eval.tail_bound = tail;
            break;
        }
    }
    eval.series_sum = sum.value();
    CompensatedSum total;
    total.add(p);
    total.add(eval.series_sum);
    eval.partial_sum = total.value();
    return eval;
}

CorrectnessProbability brute_force_majority_prob(const EnsembleConfig& cfg) {
    const std::int64_t n = cfg.n();
    if (n > kBruteForceMaxN) {
        throw ResourceGuardError("brute force enumeration is limited to n <= " +
                                 std::to_string(kBruteForceMaxN) + " (got " + std::to_string(n) + ")");
    }
    const double p = cfg.p();
    const double q = 1.0 - p;
    const auto outcomes = std::uint64_t{1} << n;

    CompensatedSum winning;
    CompensatedSum losing;
    for (std::uint64_t mask = 0; mask < outcomes; ++mask) {
        // Bit i set: classifier i voted correctly.
        double mass = 1.0;
        for (std::int64_t i = 0; i < n; ++i) {
            mass *= ((mask >> i) & 1U) ? p : q;
        }
        if (2 * std::popcount(mask) > n) {
            winning.add(mass);
        } else {
            losing.add(mass);
        }
    }
    return {winning.value(), losing.value(), Method::BruteForce};
}

}  // namespace condorcet
