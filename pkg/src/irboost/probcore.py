"""Core probability types, count-based estimators, and the model-agnostic
invariant/boost formulas shared by the classical and quantum document models.

Everything here is a pure function over immutable values: thread-safe with
no coordination.

Conventions
-----------
* R / ~R  : a document is relevant / non-relevant to the query.
* X       : a document contains the expansion term.
* Accardi invariant A = (P(X) - P(X|~R)) / (P(X|R) - P(X|~R)).
  When the law of total probability holds, A = P(R) and 0 <= A <= 1.
* Precision boost Delta = (P(R|X) - P(R)) / P(R).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import AccardiUndefined, BoostUndefined, EmptyArm

# Denominator guard for all "quantity undefined here" checks.  Small enough
# to pass the analytic identities, large enough to dodge catastrophic
# cancellation in double precision.
EPS_DENOM = 1e-9


class Probability(float):
    """A float constrained to [0, 1] at construction time."""

    __slots__ = ()

    def __new__(cls, value) -> "Probability":
        v = float(value)
        if not (0.0 <= v <= 1.0):  # also rejects NaN
            raise ValueError(f"probability must lie in [0, 1], got {value!r}")
        return super().__new__(cls, v)


@dataclass(frozen=True)
class RateTriple:
    """The three measured rates feeding the Accardi invariant.

    No joint constraint is imposed: p_x need not equal the total-probability
    mixture of the two conditionals (the quantum model deliberately breaks
    that law).
    """

    p_x_given_r: float
    p_x_given_n: float
    p_x: float

    def __post_init__(self):
        for name in ("p_x_given_r", "p_x_given_n", "p_x"):
            object.__setattr__(self, name, Probability(getattr(self, name)))


@dataclass(frozen=True)
class ArmCounts:
    """Raw outcome tally from one measurement arm of a document stream."""

    n_total: int
    n_success: int

    def __post_init__(self):
        if self.n_total < 0 or self.n_success < 0:
            raise ValueError("counts must be nonnegative")
        if self.n_success > self.n_total:
            raise ValueError(
                f"n_success={self.n_success} exceeds n_total={self.n_total}"
            )


@dataclass(frozen=True)
class EstimateWithError:
    """A point estimate with its (first-order) standard error."""

    estimate: float
    std_error: float
    n: int

    def __post_init__(self):
        if self.std_error < 0:
            raise ValueError("std_error must be nonnegative")


def accardi(rates: RateTriple) -> float:
    """Accardi invariant of a rate triple; an unbounded real.

    Raises AccardiUndefined when the two conditional rates coincide (the
    term does not discriminate relevance).
    """
    denom = rates.p_x_given_r - rates.p_x_given_n
    if abs(denom) < EPS_DENOM:
        raise AccardiUndefined(
            f"P(X|R) = P(X|~R) = {rates.p_x_given_r} within tolerance"
        )
    return (rates.p_x - rates.p_x_given_n) / denom


def boost(p_r_given_x: float, p_r: float) -> float:
    """Relative precision boost (P(R|X) - P(R)) / P(R); may be negative.

    Raises BoostUndefined when P(R) ~ 0 (no relevant documents exist, so a
    relative boost is meaningless).
    """
    post = Probability(p_r_given_x)
    prior = Probability(p_r)
    if prior < EPS_DENOM:
        raise BoostUndefined(f"baseline P(R)={p_r} is effectively zero")
    return (post - prior) / prior


def total_probability(
    p_x_given_r: float, p_x_given_n: float, p_r: float
) -> Probability:
    """Total-probability mixture P(X|R) P(R) + P(X|~R) (1 - P(R))."""
    qr = Probability(p_x_given_r)
    qn = Probability(p_x_given_n)
    p = Probability(p_r)
    v = qr * p + qn * (1.0 - p)
    # rounding can overshoot the closed interval by an ulp
    return Probability(min(1.0, max(0.0, v)))


def estimate_rate(counts: ArmCounts) -> EstimateWithError:
    """Empirical success rate of an arm with its binomial (Wald) error.

    std_error = sqrt(p_hat (1 - p_hat) / n); exactly zero on degenerate
    all-success / all-failure tallies.
    """
    if counts.n_total == 0:
        raise EmptyArm("no documents observed in this arm")
    p_hat = counts.n_success / counts.n_total
    se = math.sqrt(p_hat * (1.0 - p_hat) / counts.n_total)
    return EstimateWithError(estimate=p_hat, std_error=se, n=counts.n_total)


def accardi_from_counts(
    arm_r: ArmCounts, arm_n: ArmCounts, arm_direct: ArmCounts
) -> EstimateWithError:
    """Accardi invariant of three empirical arm tallies.

    The point estimate is exactly ``accardi`` applied to the three empirical
    rates.  The standard error is first-order (delta method) treating the
    three arms as independent experiments; ``n`` is the combined number of
    tallied documents.
    """
    est_r = estimate_rate(arm_r)
    est_n = estimate_rate(arm_n)
    est_x = estimate_rate(arm_direct)
    rates = RateTriple(est_r.estimate, est_n.estimate, est_x.estimate)
    a = accardi(rates)

    denom = est_r.estimate - est_n.estimate
    d_dx = 1.0 / denom
    d_dr = -(est_x.estimate - est_n.estimate) / denom**2
    d_dn = (est_x.estimate - est_r.estimate) / denom**2
    var = (
        (d_dx * est_x.std_error) ** 2
        + (d_dr * est_r.std_error) ** 2
        + (d_dn * est_n.std_error) ** 2
    )
    return EstimateWithError(
        estimate=a,
        std_error=math.sqrt(var),
        n=arm_r.n_total + arm_n.n_total + arm_direct.n_total,
    )
