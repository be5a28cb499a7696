"""Majority-vote correctness probabilities for independent binary classifiers."""

from ._core import (
    BoundResult,
    CorrectnessProbability,
    DomainError,
    EnsembleConfig,
    HypothesisViolation,
    Method,
    ResourceGuardError,
    SeriesEvaluation,
    SimulationReport,
    brute_force_majority_prob,
    chebyshev_lower_bound,
    exact_majority_prob,
    lemma1_partial_sum,
    llr,
    log_binomial,
    majority_decide,
    map_decide,
    recursion_delta,
    recursive_majority_prob,
    simulate_ensemble,
    tally,
    weighted_majority_decide,
    wilson_interval,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
