#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library: binomials come from Pascal's rule on big integers and
// sums are carried out in 100-digit binary floating point.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>>;

/// Row n of Pascal's triangle, built additively.
inline std::vector<Big> pascal_row(std::int64_t n) {
    std::vector<Big> row{1};
    for (std::int64_t i = 1; i <= n; ++i) {
        std::vector<Big> next(row.size() + 1);
        next.front() = 1;
        next.back() = 1;
        for (std::size_t k = 1; k < row.size(); ++k) next[k] = row[k - 1] + row[k];
        row = std::move(next);
    }
    return row;
}

inline double log_choose(std::int64_t n, std::int64_t k) {
    const Real c(pascal_row(n)[static_cast<std::size_t>(k)]);
    return static_cast<double>(log(c));
}

/// Decimal string -> Real, so p = "0.6" is the exact decimal rather than the
/// nearest double.
inline Real real(const std::string& decimal) { return Real(decimal); }

/// Upper and lower tails of Binomial(n, p) split at n/2, in high precision.
struct Tails {
    Real win;
    Real lose;
};

inline Tails majority_tails(std::int64_t n, const Real& p) {
    const auto row = pascal_row(n);
    const Real q = 1 - p;
    Tails t{0, 0};
    for (std::int64_t k = 0; k <= n; ++k) {
        const Real term = Real(row[static_cast<std::size_t>(k)]) * pow(p, k) * pow(q, n - k);
        (2 * k > n ? t.win : t.lose) += term;
    }
    return t;
}

/// p + sum_{k=0}^{terms-1} C(2k+1,k) (p(1-p))^{k+1} (2p-1), binomials via
/// the exact ratio C(2k+3,k+1) / C(2k+1,k) = (2k+3)(2k+2) / ((k+1)(k+2)).
inline Real increment_series(const Real& p, std::int64_t terms) {
    const Real x = p * (1 - p);
    Real binom = 1;  // C(1, 0)
    Real xpow = x;
    Real sum = 0;
    for (std::int64_t k = 0; k < terms; ++k) {
        sum += binom * xpow;
        binom = binom * (2 * k + 3) * (2 * k + 2) / ((k + 1) * (k + 2));
        xpow *= x;
    }
    return p + sum * (2 * p - 1);
}

}  // namespace oracle
