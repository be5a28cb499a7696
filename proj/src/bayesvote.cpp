#include "condorcet/bayesvote.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "condorcet/ensemble.hpp"

namespace condorcet {

VoteVector::VoteVector(std::vector<int> votes) : votes_(std::move(votes)) {
    if (votes_.empty() || votes_.size() % 2 == 0) {
        throw DomainError("vote vector length must be odd (got " + std::to_string(votes_.size()) + ")");
    }
    for (int v : votes_) {
        if (v != 1 && v != -1) throw DomainError("votes must be +1 or -1 (got " + std::to_string(v) + ")");
    }
}

VoteVector VoteVector::parse(std::string_view text) {
    std::vector<int> votes;
    const bool compact = text.find_first_not_of("+- ") == std::string_view::npos;
    if (compact) {
        for (char c : text) {
            if (c == '+') votes.push_back(1);
            if (c == '-') votes.push_back(-1);
        }
        return VoteVector(std::move(votes));
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = std::min(text.find_first_of(", ", pos), text.size());
        std::string_view token = text.substr(pos, end - pos);
        pos = end + 1;
        if (token.empty()) continue;
        if (token.front() == '+') token.remove_prefix(1);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw DomainError("cannot parse vote '" + std::string(token) + "'");
        }
        votes.push_back(value);
    }
    return VoteVector(std::move(votes));
}

VoteVector VoteVector::negated() const {
    std::vector<int> out(votes_.size());
    std::transform(votes_.begin(), votes_.end(), out.begin(), [](int v) { return -v; });
    return VoteVector(std::move(out));
}

PriorPair::PriorPair(double p_pos, double p_neg) : p_pos_(p_pos), p_neg_(p_neg) {
    if (!(p_pos >= 0.0 && p_pos <= 1.0 && p_neg >= 0.0 && p_neg <= 1.0)) {
        throw DomainError("priors must lie in [0, 1]");
    }
    if (std::abs(p_pos + p_neg - 1.0) > 1e-12) throw DomainError("priors must sum to 1");
}

namespace {

void require_open_unit(double p, const char* what) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError(std::string(what) + " must lie strictly inside (0, 1) (got " + std::to_string(p) + ")");
    }
}

}  // namespace

std::int64_t tally(const VoteVector& v) {
    std::int64_t s = 0;
    for (int x : v.votes()) s += x;
    return s;
}

Label majority_decide(const VoteVector& v) {
    return tally(v) > 0 ? Label::Positive : Label::Negative;
}

double llr(const VoteVector& v, double p) {
    require_open_unit(p, "p");
    return (std::log(p) - std::log(1.0 - p)) * static_cast<double>(tally(v));
}

Posterior posterior(const VoteVector& v, double p, const PriorPair& priors) {
    require_open_unit(p, "p");
    const double log_p = std::log(p);
    const double log_q = std::log(1.0 - p);
    // Vote y_i contributes p when it agrees with the candidate label, 1-p otherwise.
    double loglik_pos = 0.0;
    double loglik_neg = 0.0;
    for (int y : v.votes()) {
        loglik_pos += y > 0 ? log_p : log_q;
        loglik_neg += y > 0 ? log_q : log_p;
    }
    const double joint_pos = std::log(priors.p_pos()) + loglik_pos;
    const double joint_neg = std::log(priors.p_neg()) + loglik_neg;
    const double top = std::max(joint_pos, joint_neg);
    const double log_evidence = top + std::log(std::exp(joint_pos - top) + std::exp(joint_neg - top));

    Posterior post;
    post.log_pos = joint_pos - log_evidence;
    post.log_neg = joint_neg - log_evidence;
    post.pos = std::exp(post.log_pos);
    post.neg = std::exp(post.log_neg);
    return post;
}

Decision map_decide(const VoteVector& v, double p, const PriorPair& priors) {
    const Posterior post = posterior(v, p, priors);
    Decision d;
    d.score = post.log_pos - post.log_neg;
    d.tie = post.log_pos == post.log_neg;
    d.label = post.log_pos >= post.log_neg ? Label::Positive : Label::Negative;
    return d;
}

Decision weighted_majority_decide(const VoteVector& v, std::span<const double> accuracies) {
    if (accuracies.size() != v.size()) {
        throw DomainError("accuracies length " + std::to_string(accuracies.size()) +
                          " does not match vote count " + std::to_string(v.size()));
    }
    double score = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        require_open_unit(accuracies[i], "accuracy");
        score += (std::log(accuracies[i]) - std::log(1.0 - accuracies[i])) * v.votes()[i];
    }
    Decision d;
    d.score = score;
    d.tie = score == 0.0;
    d.label = score >= 0.0 ? Label::Positive : Label::Negative;
    return d;
}

}  // namespace condorcet
