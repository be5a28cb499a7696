#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace condorcet {

enum class Label : int { Negative = -1, Positive = +1 };

constexpr int to_int(Label label) noexcept { return static_cast<int>(label); }
constexpr Label negate(Label label) noexcept {
    return label == Label::Positive ? Label::Negative : Label::Positive;
}

/// Odd-length sequence of +1/-1 predictions, so the tally is never zero.
class VoteVector {
public:
    explicit VoteVector(std::vector<int> votes);

    /// Accepts "+-+" style strings or comma/space separated tokens "+1,-1,1".
    static VoteVector parse(std::string_view text);

    std::span<const int> votes() const noexcept { return votes_; }
    std::size_t size() const noexcept { return votes_.size(); }
    VoteVector negated() const;

private:
    std::vector<int> votes_;
};

/// Class priors for labels +1 and -1; must sum to 1 within 1e-12.
class PriorPair {
public:
    PriorPair(double p_pos, double p_neg);
    static PriorPair equiprobable() { return {0.5, 0.5}; }

    double p_pos() const noexcept { return p_pos_; }
    double p_neg() const noexcept { return p_neg_; }

private:
    double p_pos_;
    double p_neg_;
};

/// Label plus the evidence it was chosen on. `tie` marks an exact tie that
/// was broken toward +1.
struct Decision {
    Label label = Label::Positive;
    bool tie = false;
    double score = 0.0;  ///< log posterior ratio (MAP) or weighted sum
};

/// Posteriors Pr(y | votes) for both classes, normalized.
struct Posterior {
    double log_pos = 0.0;
    double log_neg = 0.0;
    double pos = 0.0;
    double neg = 0.0;
};

std::int64_t tally(const VoteVector& v);

Label majority_decide(const VoteVector& v);

/// ln(p/(1-p)) * tally(v). Domain error for p outside (0, 1).
double llr(const VoteVector& v, double p);

/// Class posteriors from the per-vote likelihood and the priors.
Posterior posterior(const VoteVector& v, double p, const PriorPair& priors);

/// argmax over y of Pr(y | votes).
Decision map_decide(const VoteVector& v, double p, const PriorPair& priors);

/// sign(sum_i ln(a_i/(1-a_i)) * v_i), ties toward +1.
Decision weighted_majority_decide(const VoteVector& v, std::span<const double> accuracies);

}  // namespace condorcet
