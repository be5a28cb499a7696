#include <doctest.h>

#include <cmath>

#include "condorcet/ensemble.hpp"
#include "condorcet/numeric.hpp"
#include "oracle.hpp"

using condorcet::log_binomial;

namespace {

double rel_error(double got, double want) { return want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("log_binomial small values") {
    CHECK(log_binomial(0, 0) == 0.0);
    CHECK(log_binomial(7, 0) == 0.0);
    CHECK(log_binomial(7, 7) == 0.0);
    CHECK(log_binomial(4, 2) == doctest::Approx(std::log(6.0)).epsilon(1e-15));
    CHECK(rel_error(log_binomial(52, 26), oracle::log_choose(52, 26)) <= 1e-12);
}

TEST_CASE("log_binomial rejects invalid arguments") {
    CHECK_THROWS_AS(log_binomial(3, 4), condorcet::DomainError);
    CHECK_THROWS_AS(log_binomial(-1, 0), condorcet::DomainError);
    CHECK_THROWS_AS(log_binomial(5, -2), condorcet::DomainError);
}

TEST_CASE("log_binomial matches Pascal's triangle through the exact/asymptotic switch") {
    std::vector<oracle::Big> row{1};
    double worst = 0.0;
    for (std::int64_t n = 1; n <= 260; ++n) {
        std::vector<oracle::Big> next(row.size() + 1);
        next.front() = next.back() = 1;
        for (std::size_t k = 1; k < row.size(); ++k) next[k] = row[k - 1] + row[k];
        row = std::move(next);
        for (std::int64_t k = 1; k < n; ++k) {
            const double want = static_cast<double>(log(oracle::Real(row[static_cast<std::size_t>(k)])));
            worst = std::max(worst, rel_error(log_binomial(n, k), want));
        }
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("log_binomial large n against 25-digit references") {
    // Reference values from an independent arbitrary-precision evaluation.
    struct Case {
        std::int64_t n, k;
        double want;
    };
    const Case cases[] = {
        {1000, 500, 689.4672615678511800755},
        {401, 200, 274.7273801176779355598},
        {200, 7, 28.45690396649723067838},
        {1000000, 1, 13.81551055796427410411},
        {1000000, 3, 39.65476920466226730851},
        {1000000, 500000, 693140.0470130636825527},
        {999999, 499999, 693139.3538658831226074},
    };
    for (const Case& c : cases) {
        CAPTURE(c.n);
        CAPTURE(c.k);
        CHECK(rel_error(log_binomial(c.n, c.k), c.want) <= 1e-12);
        CHECK(log_binomial(c.n, c.k) == log_binomial(c.n, c.n - c.k));
    }
}

TEST_CASE("CompensatedSum keeps small addends") {
    condorcet::CompensatedSum s;
    s.add(1.0);
    for (int i = 0; i < 10; ++i) s.add(1e-16);
    CHECK(s.value() == doctest::Approx(1.0 + 1e-15).epsilon(1e-16));
    double naive = 1.0;
    for (int i = 0; i < 10; ++i) naive += 1e-16;
    CHECK(naive == 1.0);
}
