// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "condorcet/bayesvote.hpp"
#include "condorcet/cli.hpp"
#include "condorcet/exactprob.hpp"
#include "condorcet/simkit.hpp"
#include "oracle.hpp"

using namespace condorcet;
using nlohmann::json;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string title;
    double time_limit_s;
    std::function<Outcome()> body;
};

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

const double kTheorem2Grid[] = {0.51, 0.55, 0.6, 0.7, 0.8, 0.9};

Outcome oracle_equivalence() {
    double worst = 0.0;
    for (std::int64_t n = 1; n <= 15; n += 2) {
        for (int i = 0; i <= 10; ++i) {
            const EnsembleConfig cfg(n, i / 10.0);
            worst = std::max(worst, std::abs(exact_majority_prob(cfg).value - brute_force_majority_prob(cfg).value));
        }
    }
    return {worst <= 1e-12, "max |exact - brute| = " + fmt("%.3e", worst) + " (tol 1e-12)"};
}

Outcome monotonicity() {
    double worst_delta = 0.0;
    double min_step = INFINITY;
    int failures = 0;
    for (double p : kTheorem2Grid) {
        auto prev = exact_majority_prob(EnsembleConfig(1, p));
        for (std::int64_t n = 1; n <= 399; n += 2) {
            const auto next = exact_majority_prob(EnsembleConfig(n + 2, p));
            const double step = increase(prev, next);
            if (!(step > 0.0) || next.value < prev.value) ++failures;
            min_step = std::min(min_step, step);
            worst_delta = std::max(worst_delta, std::abs(step - recursion_delta(EnsembleConfig(n, p))));
            prev = next;
        }
    }
    return {failures == 0 && worst_delta <= 1e-12,
            "non-increasing steps = " + std::to_string(failures) + ", min step = " + fmt("%.3e", min_step) +
                ", max |step - delta| = " + fmt("%.3e", worst_delta) + " (tol 1e-12)"};
}

Outcome chebyshev() {
    int dominance_failures = 0;
    int alpha_failures = 0;
    for (double p : kTheorem2Grid) {
        for (std::int64_t n = 1; n <= 401; n += 2) {
            const EnsembleConfig cfg(n, p);
            const BoundResult b = chebyshev_lower_bound(cfg);
            if (!(b.lower <= exact_majority_prob(cfg).value)) ++dominance_failures;
            if (p == 0.75 && (b.alpha != 3.0 || b.lower != 1.0 - 3.0 / static_cast<double>(n))) ++alpha_failures;
        }
    }
    for (std::int64_t n = 1; n <= 401; n += 2) {
        const BoundResult b = chebyshev_lower_bound(EnsembleConfig(n, 0.75));
        if (b.alpha != 3.0 || b.lower != 1.0 - 3.0 / static_cast<double>(n)) ++alpha_failures;
    }
    const EnsembleConfig at101(101, 0.75);
    const double exact = exact_majority_prob(at101).value;
    const double recursive = recursive_majority_prob(at101).value;
    const bool ok = dominance_failures == 0 && alpha_failures == 0 && exact > 0.999 &&
                    std::abs(exact - recursive) <= 1e-10;
    return {ok, "bound > exact: " + std::to_string(dominance_failures) + ", alpha/1-3/n mismatches: " +
                    std::to_string(alpha_failures) + ", exact(101,0.75) = " + fmt("%.12f", exact) +
                    ", |exact - recursive| = " + fmt("%.3e", std::abs(exact - recursive))};
}

Outcome series() {
    bool ok = true;
    std::string detail;
    for (double p : {0.6, 0.75, 0.9}) {
        const SeriesEvaluation eval = lemma1_partial_sum(p, 1e-9);
        const oracle::Real hp_p(p);
        const oracle::Real same = oracle::increment_series(hp_p, eval.terms_used);
        const oracle::Real more = oracle::increment_series(hp_p, 10 * eval.terms_used);
        const double moved = static_cast<double>(abs(more - same));
        const double err = std::abs(eval.partial_sum - 1.0);
        const bool cell = err <= 1e-9 && moved <= eval.tail_bound;
        ok = ok && cell;
        detail += "p=" + fmt("%.2f", p) + ": |sum-1|=" + fmt("%.1e", err) + " terms=" +
                  std::to_string(eval.terms_used) + " moved=" + fmt("%.1e", moved) + "<=tail=" +
                  fmt("%.1e", eval.tail_bound) + "; ";
    }
    return {ok, detail};
}

Outcome bayes_optimality() {
    std::int64_t cases = 0;
    std::int64_t mismatches = 0;
    for (int n = 1; n <= 13; n += 2) {
        for (double p : {0.51, 0.6, 0.75, 0.9, 0.99}) {
            for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
                std::vector<int> v(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = ((mask >> i) & 1U) ? 1 : -1;
                const VoteVector votes(std::move(v));
                ++cases;
                if (map_decide(votes, p, PriorPair::equiprobable()).label != majority_decide(votes)) ++mismatches;
            }
        }
    }
    return {mismatches == 0, std::to_string(cases) + " vote vectors, " + std::to_string(mismatches) + " mismatches"};
}

Outcome simulation() {
    const SimulationReport r = simulate_ensemble(EnsembleConfig(3, 0.6), 1'000'000, 7);
    const double dev = std::abs(r.estimate - 0.648);

    std::ostringstream out, err;
    const int code =
        cli::run({"verify", "--n-max", "15", "--p", "0.5,0.6,0.9", "--trials", "100000", "--seed", "1"}, out, err);
    const json summary = json::parse(out.str());
    bool coverage = false;
    for (const auto& c : summary["checks"]) {
        if (c["name"] == "simulation_wilson_coverage") coverage = c["passed"].get<bool>() && c["cases"] == 24;
    }
    return {dev <= 0.002 && code == 0 && coverage,
            "estimate = " + fmt("%.6f", r.estimate) + " (|dev| = " + fmt("%.2e", dev) +
                " <= 0.002), verify exit = " + std::to_string(code) +
                ", z=4 Wilson coverage over 24 cells: " + (coverage ? "all" : "FAILED")};
}

Outcome figure_curve() {
    std::ostringstream out, err;
    const int code = cli::run({"curve", "--p", "0.55,0.6,0.7,0.8", "--n-max", "199", "--format", "json"}, out, err);
    if (code != 0) return {false, "curve exited with " + std::to_string(code)};
    const json points = json::parse(out.str())["points"];

    bool ok = points.size() == 400;
    int non_strict = 0;
    int saturated = 0;
    double p08_at_41 = 0.0;
    for (std::size_t curve = 0; curve < 4; ++curve) {
        const std::size_t first = curve * 100;
        const std::size_t last = first + 99;
        for (std::size_t i = first + 1; i <= last; ++i) {
            const CorrectnessProbability a{points[i - 1]["exact"].get<double>(), points[i - 1]["complement"].get<double>()};
            const CorrectnessProbability b{points[i]["exact"].get<double>(), points[i]["complement"].get<double>()};
            if (!(increase(a, b) > 0.0) || b.value < a.value) ++non_strict;
            if (b.value == a.value) ++saturated;
        }
        ok = ok && points[last]["exact"].get<double>() > points[first]["exact"].get<double>();
        if (points[first]["p"].get<double>() == 0.8) p08_at_41 = points[first + 20]["exact"].get<double>();
    }
    ok = ok && non_strict == 0 && p08_at_41 > 0.99;
    return {ok, "non-increasing steps = " + std::to_string(non_strict) +
                    " (steps resolved only via complement: " + std::to_string(saturated) +
                    "), P(n=41, p=0.8) = " + fmt("%.9f", p08_at_41)};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"AC1", "oracle equivalence (exact vs brute force, n<=15)", 30, oracle_equivalence},
        {"AC2", "monotonicity and recursion increment (n<=399)", 10, monotonicity},
        {"AC3", "Chebyshev lower bound", 5, chebyshev},
        {"AC4", "increment series converges to 1", 5, series},
        {"AC5", "MAP equals majority (exhaustive, n<=13)", 60, bayes_optimality},
        {"AC6", "simulation consistency", 60, simulation},
        {"AC7", "curve data (p=0.55,0.6,0.7,0.8; n<=199)", 5, figure_curve},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.body();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.time_limit_s;
        const bool pass = outcome.passed && in_time;
        if (!pass) ++failed;
        std::printf("[%s] %s %s: %s [%.2fs / limit %.0fs]\n", pass ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                    outcome.detail.c_str(), secs, c.time_limit_s);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
