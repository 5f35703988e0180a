"""Closed-form urn model: documents are balls drawn from an urn.

Parameters: p = P(R) prior relevance, q_r = P(X|R), q_n = P(X|~R).
Belief revision is Bayesian, so the law of total probability holds and the
Accardi invariant always equals p (hence lies in [0, 1]).

Note on the boost formula: expanding Delta = P(R|X)/P(R) - 1 with the Bayes
posterior gives numerator (q_r - q_n)(1 - p).  A sum (q_r + q_n) sometimes
seen in this place does not follow from the posterior and is not used here;
``boost_classical`` is required to agree with the two-step route
boost(posterior_bayes(params), p) and is tested against it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AccardiUndefined, BoostUndefined
from .probcore import EPS_DENOM, Probability, RateTriple, total_probability


@dataclass(frozen=True)
class ClassicalParams:
    """Urn-model parameter triple (p, q_r, q_n), each in [0, 1]."""

    p: float
    q_r: float
    q_n: float

    def __post_init__(self):
        for name in ("p", "q_r", "q_n"):
            v = float(getattr(self, name))
            if not (0.0 <= v <= 1.0):
                raise ValueError(f"{name} must lie in [0, 1], got {v!r}")
            object.__setattr__(self, name, v)


def marginal_term_rate(params: ClassicalParams) -> Probability:
    """P(X) by total probability: q_r p + q_n (1 - p)."""
    return total_probability(params.q_r, params.q_n, params.p)


def rate_triple(params: ClassicalParams) -> RateTriple:
    """The (P(X|R), P(X|~R), P(X)) triple implied by the urn model."""
    return RateTriple(params.q_r, params.q_n, marginal_term_rate(params))


def posterior_bayes(params: ClassicalParams) -> Probability:
    """Bayes posterior P(R|X) = q_r p / (q_r p + q_n (1 - p)).

    Raises BoostUndefined when the marginal P(X) is effectively zero: the
    term never occurs and conditioning on it is vacuous.
    """
    denom = params.q_r * params.p + params.q_n * (1.0 - params.p)
    if denom < EPS_DENOM:
        raise BoostUndefined(
            f"marginal P(X)={denom} is effectively zero for {params}"
        )
    return Probability(min(1.0, params.q_r * params.p / denom))


def boost_classical(params: ClassicalParams) -> float:
    """Expected precision boost of expanding with the term:

        Delta = (q_r - q_n)(1 - p) / (q_r p + q_n (1 - p))

    Positive iff q_r > q_n.  Raises BoostUndefined when p ~ 0 (no relevant
    documents; relative boost meaningless) or when P(X) ~ 0.
    """
    if params.p < EPS_DENOM:
        raise BoostUndefined(f"prior P(R)={params.p} is effectively zero")
    denom = params.q_r * params.p + params.q_n * (1.0 - params.p)
    if denom < EPS_DENOM:
        raise BoostUndefined(
            f"marginal P(X)={denom} is effectively zero for {params}"
        )
    return (params.q_r - params.q_n) * (1.0 - params.p) / denom


def accardi_classical(params: ClassicalParams) -> float:
    """Accardi invariant of the urn model: exactly p.

    Raises AccardiUndefined when q_r ~ q_n (non-discriminating term).
    """
    if abs(params.q_r - params.q_n) < EPS_DENOM:
        raise AccardiUndefined(
            f"q_r = q_n = {params.q_r} within tolerance"
        )
    return params.p
