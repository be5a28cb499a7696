#pragma once

#include <cstdint>

namespace condorcet {

/// Natural log of the binomial coefficient C(n, k).
///
/// Exact integer arithmetic for n <= 60; above that, a Stirling expansion
/// with tabulated corrections for small arguments. Relative error stays
/// below 1e-12 for n up to 1e6. Throws DomainError unless 0 <= k <= n.
double log_binomial(std::int64_t n, std::int64_t k);

/// Neumaier (improved Kahan) running sum.
class CompensatedSum {
public:
    void add(double x) noexcept;
    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace condorcet
