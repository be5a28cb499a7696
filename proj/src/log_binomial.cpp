#include "condorcet/numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "condorcet/ensemble.hpp"

namespace condorcet {
namespace {

// stirlerr(k) = ln k! - [(k + 1/2) ln k - k + ln sqrt(2 pi)] for k = 1..15.
constexpr std::array<double, 16> kStirlingErrorTable = {
    0.0,
    0.08106146679532725821967026,
    0.04134069595540929409382208,
    0.02767792568499833914878929,
    0.02079067210376509311152277,
    0.01664469118982119216319487,
    0.01387612882307074799874573,
    0.01189670994589177009505572,
    0.01041126526197209649747857,
    0.009255462182712732917728637,
    0.008330563433362871256469319,
    0.007573675487951840794972024,
    0.006942840107209529865664153,
    0.006408994188004207068439631,
    0.005951370112758847735624416,
    0.00555473355196280137103869,
};

double stirling_error(std::int64_t k) {
    if (k < static_cast<std::int64_t>(kStirlingErrorTable.size())) {
        return kStirlingErrorTable[static_cast<std::size_t>(k)];
    }
    constexpr double s0 = 1.0 / 12.0;
    constexpr double s1 = 1.0 / 360.0;
    constexpr double s2 = 1.0 / 1260.0;
    constexpr double s3 = 1.0 / 1680.0;
    constexpr double s4 = 1.0 / 1188.0;
    const double x = static_cast<double>(k);
    const double xx = x * x;
    if (k > 500) return (s0 - s1 / xx) / x;
    if (k > 80) return (s0 - (s1 - s2 / xx) / xx) / x;
    if (k > 35) return (s0 - (s1 - (s2 - s3 / xx) / xx) / xx) / x;
    return (s0 - (s1 - (s2 - (s3 - s4 / xx) / xx) / xx) / xx) / x;
}

// Exact in 64 bits: every intermediate r * (n - k + i) stays below 2^63 for n <= 60.
constexpr std::int64_t kExactLimit = 60;

double log_binomial_exact(std::int64_t n, std::int64_t k) {
    std::uint64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return std::log(static_cast<double>(r));
}

}  // namespace

double log_binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) {
        throw DomainError("log_binomial requires 0 <= k <= n (got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
    }
    k = std::min(k, n - k);
    if (k == 0) return 0.0;
    if (n <= kExactLimit) return log_binomial_exact(n, k);

    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    const double rest = nd - kd;
    // n ln n - k ln k - (n-k) ln(n-k), split into two positive parts.
    const double entropy = kd * std::log1p(rest / kd) + rest * std::log1p(kd / rest);
    const double prefactor = 0.5 * std::log(nd / (2.0 * std::numbers::pi * kd * rest));
    const double correction = stirling_error(n) - stirling_error(k) - stirling_error(n - k);
    return entropy + prefactor + correction;
}

void CompensatedSum::add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
        compensation_ += (sum_ - t) + x;
    } else {
        compensation_ += (x - t) + sum_;
    }
    sum_ = t;
}

}  // namespace condorcet
