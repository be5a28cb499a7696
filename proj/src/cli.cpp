#include "condorcet/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>

#include "condorcet/bayesvote.hpp"
#include "condorcet/exactprob.hpp"
#include "condorcet/simkit.hpp"

namespace condorcet::cli {

using nlohmann::json;

std::string format_lossless(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::string format_plain(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

json config_json(const EnsembleConfig& cfg) { return {{"n", cfg.n()}, {"p", cfg.p()}}; }

json probability_json(const EnsembleConfig& cfg, const CorrectnessProbability& prob) {
    return {{"config", config_json(cfg)},
            {"value", prob.value},
            {"complement", prob.complement},
            {"method", std::string(to_string(prob.method))},
            {"clamped", prob.clamped}};
}

json optional_json(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

std::string csv_optional(const std::optional<double>& x) { return x ? format_lossless(*x) : std::string(); }

std::string plain_optional(const std::optional<double>& x) { return x ? format_plain(*x) : std::string("-"); }

struct Flags {
    std::int64_t n = 1;
    double p = 0.5;
    std::vector<double> p_list;
    std::int64_t n_max = 1;
    std::int64_t trials = -1;  ///< -1: not given, use the subcommand default
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    double z = kDefaultConfidenceZ;
    std::string format;  ///< empty: use the subcommand default
    bool simulate = false;
    std::string votes;
    double prior_pos = 0.5;
    std::vector<double> accuracies;
};

void emit_probability(std::ostream& out, const Flags& f, const EnsembleConfig& cfg,
                      const CorrectnessProbability& prob) {
    if (f.format == "json") {
        out << probability_json(cfg, prob).dump() << '\n';
    } else if (f.format == "csv") {
        out << "n,p,value,method\n"
            << cfg.n() << ',' << format_lossless(cfg.p()) << ',' << format_lossless(prob.value) << ','
            << to_string(prob.method) << '\n';
    } else {
        out << format_plain(prob.value) << " (" << to_string(prob.method) << ")\n";
    }
}

void cmd_bound(std::ostream& out, const Flags& f) {
    const EnsembleConfig cfg(f.n, f.p);
    const BoundResult b = chebyshev_lower_bound(cfg);
    if (f.format == "json") {
        out << json{{"config", config_json(cfg)}, {"lower", b.lower},       {"alpha", b.alpha},
                    {"n", b.n},                   {"mean", b.mean},         {"variance", b.variance},
                    {"method", std::string(to_string(Method::ChebyshevBound))}}
                   .dump()
            << '\n';
    } else if (f.format == "csv") {
        out << "n,p,lower,alpha,mean,variance\n"
            << b.n << ',' << format_lossless(f.p) << ',' << format_lossless(b.lower) << ','
            << format_lossless(b.alpha) << ',' << format_lossless(b.mean) << ',' << format_lossless(b.variance)
            << '\n';
    } else {
        out << "lower " << format_plain(b.lower) << "\nalpha " << format_plain(b.alpha) << '\n';
    }
}

void cmd_series(std::ostream& out, const Flags& f) {
    const SeriesEvaluation s = lemma1_partial_sum(f.p, f.tolerance);
    if (f.format == "json") {
        out << json{{"p", f.p},
                    {"tolerance", f.tolerance},
                    {"partial_sum", s.partial_sum},
                    {"series_sum", s.series_sum},
                    {"terms_used", s.terms_used},
                    {"tail_bound", s.tail_bound},
                    {"target", s.target}}
                   .dump()
            << '\n';
    } else if (f.format == "csv") {
        out << "p,partial_sum,series_sum,terms_used,tail_bound,target\n"
            << format_lossless(f.p) << ',' << format_lossless(s.partial_sum) << ','
            << format_lossless(s.series_sum) << ',' << s.terms_used << ',' << format_lossless(s.tail_bound) << ','
            << format_lossless(s.target) << '\n';
    } else {
        out << "partial_sum " << format_plain(s.partial_sum) << "\nterms_used " << s.terms_used
            << "\ntail_bound " << format_plain(s.tail_bound) << '\n';
    }
}

json report_json(const SimulationReport& r) {
    return {{"config", config_json(r.config)}, {"trials", r.trials},     {"successes", r.successes},
            {"estimate", r.estimate},          {"ci_low", r.ci_low},     {"ci_high", r.ci_high},
            {"confidence_z", r.confidence_z},  {"seed", r.seed},         {"method", "monte_carlo"}};
}

void cmd_simulate(std::ostream& out, const Flags& f) {
    const SimulationReport r = simulate_ensemble(EnsembleConfig(f.n, f.p), f.trials, f.seed, f.z);
    if (f.format == "json") {
        out << report_json(r).dump() << '\n';
    } else if (f.format == "csv") {
        out << "n,p,trials,successes,estimate,ci_low,ci_high,confidence_z,seed\n"
            << r.config.n() << ',' << format_lossless(r.config.p()) << ',' << r.trials << ',' << r.successes << ','
            << format_lossless(r.estimate) << ',' << format_lossless(r.ci_low) << ','
            << format_lossless(r.ci_high) << ',' << format_lossless(r.confidence_z) << ',' << r.seed << '\n';
    } else {
        out << format_plain(r.estimate) << " [" << format_plain(r.ci_low) << ", " << format_plain(r.ci_high)
            << "] (" << r.successes << '/' << r.trials << ", seed " << r.seed << ")\n";
    }
}

struct CurveRow {
    std::int64_t n;
    double p;
    double exact;
    double complement;
    double recursive;
    std::optional<double> bound;
    std::optional<double> simulated;
};

void cmd_curve(std::ostream& out, const Flags& f) {
    if (f.p_list.empty()) throw DomainError("curve requires at least one --p value");
    if (f.n_max < 1 || f.n_max % 2 == 0) throw DomainError("n-max must be odd (got " + std::to_string(f.n_max) + ")");
    if (f.simulate && f.trials < 1) throw DomainError("trials must be positive when --simulate is set");

    std::vector<double> ps = f.p_list;
    std::stable_sort(ps.begin(), ps.end());

    std::vector<CurveRow> rows;
    std::uint64_t index = 0;
    for (double p : ps) {
        for (std::int64_t n = 1; n <= f.n_max; n += 2, ++index) {
            const EnsembleConfig cfg(n, p);
            const CorrectnessProbability exact = exact_majority_prob(cfg);
            CurveRow row{n, p, exact.value, exact.complement, recursive_majority_prob(cfg).value, {}, {}};
            if (p > 0.5) row.bound = chebyshev_lower_bound(cfg).lower;
            if (f.simulate) row.simulated = simulate_ensemble(cfg, f.trials, derive_seed(f.seed, index)).estimate;
            rows.push_back(row);
        }
    }

    if (f.format == "json") {
        json points = json::array();
        for (const CurveRow& r : rows) {
            points.push_back({{"n", r.n},
                              {"p", r.p},
                              {"exact", r.exact},
                              {"complement", r.complement},
                              {"recursive", r.recursive},
                              {"bound", optional_json(r.bound)},
                              {"simulated", optional_json(r.simulated)}});
        }
        out << json{{"points", points}}.dump() << '\n';
    } else if (f.format == "csv") {
        out << "n,p,exact,recursive,bound,simulated\n";
        for (const CurveRow& r : rows) {
            out << r.n << ',' << format_lossless(r.p) << ',' << format_lossless(r.exact) << ','
                << format_lossless(r.recursive) << ',' << csv_optional(r.bound) << ','
                << csv_optional(r.simulated) << '\n';
        }
    } else {
        for (const CurveRow& r : rows) {
            out << r.n << '\t' << format_plain(r.p) << '\t' << format_plain(r.exact) << '\t'
                << format_plain(r.recursive) << '\t' << plain_optional(r.bound) << '\t'
                << plain_optional(r.simulated) << '\n';
        }
    }
}

int cmd_verify(std::ostream& out, const Flags& f, const Calculators& calc) {
    VerifyOptions options;
    options.n_max = f.n_max;
    if (!f.p_list.empty()) options.p_grid = f.p_list;
    options.trials = f.trials;
    options.seed = f.seed;
    const VerificationSummary summary = run_verification(options, calc);

    if (f.format == "plain") {
        for (const CheckResult& c : summary.checks) {
            out << (c.passed ? "PASS " : "FAIL ") << c.name << " max_error=" << format_plain(c.max_error)
                << " cases=" << c.cases << '\n';
        }
    } else {
        json checks = json::array();
        for (const CheckResult& c : summary.checks) {
            checks.push_back({{"name", c.name},
                              {"passed", c.passed},
                              {"max_error", c.max_error},
                              {"tolerance", c.tolerance},
                              {"cases", c.cases},
                              {"failures", c.failures}});
        }
        out << json{{"passed", summary.passed()},
                    {"n_max", options.n_max},
                    {"p_grid", options.p_grid},
                    {"trials", options.trials},
                    {"seed", options.seed},
                    {"z", options.z},
                    {"checks", checks}}
                   .dump()
            << '\n';
    }
    return summary.passed() ? kSuccess : kVerificationFailure;
}

void cmd_decide(std::ostream& out, const Flags& f) {
    const VoteVector votes = VoteVector::parse(f.votes);
    const PriorPair priors(f.prior_pos, 1.0 - f.prior_pos);
    const Label majority = majority_decide(votes);
    const double log_ratio = llr(votes, f.p);
    const Posterior post = posterior(votes, f.p, priors);
    const Decision map = map_decide(votes, f.p, priors);
    std::optional<Decision> weighted;
    if (!f.accuracies.empty()) weighted = weighted_majority_decide(votes, f.accuracies);

    if (f.format == "json") {
        json j{{"votes", std::vector<int>(votes.votes().begin(), votes.votes().end())},
               {"tally", tally(votes)},
               {"majority", to_int(majority)},
               {"llr", log_ratio},
               {"map",
                {{"label", to_int(map.label)},
                 {"tie", map.tie},
                 {"posterior_pos", post.pos},
                 {"posterior_neg", post.neg}}}};
        if (weighted) {
            j["weighted"] = {{"label", to_int(weighted->label)}, {"tie", weighted->tie}, {"score", weighted->score}};
        }
        out << j.dump() << '\n';
    } else if (f.format == "csv") {
        out << "tally,majority,llr,map,map_tie,weighted,weighted_tie\n"
            << tally(votes) << ',' << to_int(majority) << ',' << format_lossless(log_ratio) << ','
            << to_int(map.label) << ',' << (map.tie ? 1 : 0) << ','
            << (weighted ? std::to_string(to_int(weighted->label)) : "") << ','
            << (weighted ? (weighted->tie ? "1" : "0") : "") << '\n';
    } else {
        out << "tally " << tally(votes) << "\nmajority " << to_int(majority) << "\nllr " << format_plain(log_ratio)
            << "\nmap " << to_int(map.label) << (map.tie ? " (tie)" : "") << '\n';
        if (weighted) out << "weighted " << to_int(weighted->label) << (weighted->tie ? " (tie)" : "") << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Calculators& calc) {
    CLI::App app{"Majority-vote correctness probabilities for independent binary classifiers", "condorcet-kit"};
    app.require_subcommand(1);
    Flags f;

    const auto add_format = [&f](CLI::App* sub, const char* def) {
        sub->add_option("--format", f.format, std::string("Output format (default ") + def + ")")
            ->check(CLI::IsMember({"json", "csv", "plain"}));
    };

    auto* exact = app.add_subcommand("exact", "Exact binomial tail P(S_n > 0)");
    auto* recursive = app.add_subcommand("recursive", "P(S_n > 0) by the n -> n+2 recursion");
    auto* bound = app.add_subcommand("bound", "Chebyshev lower bound 1 - alpha/n");
    for (auto* sub : {exact, recursive, bound}) {
        sub->add_option("--n", f.n, "Odd ensemble size")->required();
        sub->add_option("--p", f.p, "Per-classifier accuracy")->required();
    }

    auto* series = app.add_subcommand("series", "Truncated increment series converging to 1");
    series->add_option("--p", f.p, "Per-classifier accuracy, > 1/2")->required();
    series->add_option("--tolerance", f.tolerance, "Tail tolerance")->capture_default_str();

    auto* simulate = app.add_subcommand("simulate", "Seeded Monte Carlo estimate");
    simulate->add_option("--n", f.n, "Odd ensemble size")->required();
    simulate->add_option("--p", f.p, "Per-classifier accuracy")->required();
    simulate->add_option("--trials", f.trials, "Number of trials")->required();
    simulate->add_option("--seed", f.seed, "RNG seed")->capture_default_str();
    simulate->add_option("--z", f.z, "Wilson interval z")->capture_default_str();

    auto* curve = app.add_subcommand("curve", "Correctness probability as a function of n, one curve per p");
    curve->add_option("--p", f.p_list, "Comma-separated accuracies")->delimiter(',')->required();
    curve->add_option("--n-max", f.n_max, "Largest odd ensemble size")->required();
    curve->add_flag("--simulate", f.simulate, "Add a Monte Carlo column");
    curve->add_option("--trials", f.trials, "Trials per simulated point");
    curve->add_option("--seed", f.seed, "Base RNG seed");

    auto* verify = app.add_subcommand("verify", "Cross-check every calculator and invariant");
    verify->add_option("--n-max", f.n_max, "Largest odd ensemble size")->required();
    verify->add_option("--p", f.p_list, "Comma-separated accuracies")->delimiter(',');
    verify->add_option("--trials", f.trials, "Trials per simulated cell (0 disables)");
    verify->add_option("--seed", f.seed, "Base RNG seed");

    auto* decide = app.add_subcommand("decide", "Majority, LLR and MAP decisions for a vote vector");
    decide->add_option("--votes", f.votes, "Votes, e.g. '+-+' or '1,-1,1'")->required();
    decide->add_option("--p", f.p, "Per-classifier accuracy in (0, 1)")->required();
    decide->add_option("--prior-pos", f.prior_pos, "Prior of label +1")->capture_default_str();
    decide->add_option("--accuracies", f.accuracies, "Per-classifier accuracies for the weighted vote")
        ->delimiter(',');

    for (auto* sub : {exact, recursive, bound, series, simulate, decide}) add_format(sub, "plain");
    add_format(curve, "csv");
    add_format(verify, "json");

    std::vector<std::string> argv_storage{"condorcet-kit"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    CLI::App* chosen = app.get_subcommands().front();
    if (f.format.empty()) {
        f.format = chosen == curve ? "csv" : chosen == verify ? "json" : "plain";
    }

    try {
        if (chosen == exact) {
            const EnsembleConfig cfg(f.n, f.p);
            emit_probability(out, f, cfg, exact_majority_prob(cfg));
        } else if (chosen == recursive) {
            const EnsembleConfig cfg(f.n, f.p);
            emit_probability(out, f, cfg, recursive_majority_prob(cfg));
        } else if (chosen == bound) {
            cmd_bound(out, f);
        } else if (chosen == series) {
            cmd_series(out, f);
        } else if (chosen == simulate) {
            cmd_simulate(out, f);
        } else if (chosen == curve) {
            if (f.trials < 0) f.trials = 10'000;
            cmd_curve(out, f);
        } else if (chosen == verify) {
            if (f.trials < 0) f.trials = 100'000;
            if (verify->count("--seed") == 0) f.seed = 1;
            return cmd_verify(out, f, calc);
        } else if (chosen == decide) {
            cmd_decide(out, f);
        }
    } catch (const HypothesisViolation& e) {
        err << "error: " << e.what() << '\n';
        return kHypothesisViolation;
    } catch (const std::logic_error& e) {
        // DomainError, ResourceGuardError and other bad-argument failures.
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kSuccess;
}

}  // namespace condorcet::cli
