"""Seeded Monte Carlo document streams for both models.

Five tallies are produced per run:

* ``COND_ON_RELEVANT``      source -> relevance filter (keep R) -> check X
* ``COND_ON_NON_RELEVANT``  source -> relevance filter (keep ~R) -> check X
* ``DIRECT_TERM``           source -> check X (relevance check removed)
* ``EXPAND_THEN_RELEVANCE`` source -> term filter (keep X) -> check relevance
* baseline                  source -> check relevance (no filtering)

The baseline is not one of the four filtered arms; it is the unconditioned
relevance tally the boost comparison needs.

Each arm runs until ``n_per_arm`` *accepted* documents ("wait for the same
number of documents to arrive" semantics); the raw draws consumed are
reported so the latency cost of filtering is observable.  Every arm draws
from its own RNG substream keyed by (seed, arm index), so arm results are
independent of the order (or parallelism) in which arms are simulated, and
identical configs give bit-identical results.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Union

import numpy as np

from .classical import ClassicalParams
from .errors import ArmStarvation, BoostUndefined, UndefinedQuantity
from .probcore import (
    EPS_DENOM,
    ArmCounts,
    EstimateWithError,
    RateTriple,
    accardi_from_counts,
    estimate_rate,
)
from .quantum import QuantumParams, quantum_rates

ModelParams = Union[ClassicalParams, QuantumParams]

# Raw-draw budget per arm; acceptance probabilities below 1/MAX_DRAWS_FACTOR
# starve the arm instead of hanging the run.
MAX_DRAWS_FACTOR = 10_000

_CHUNK = 1 << 15


class ArmKind(enum.Enum):
    COND_ON_RELEVANT = "cond_on_relevant"
    COND_ON_NON_RELEVANT = "cond_on_non_relevant"
    DIRECT_TERM = "direct_term"
    EXPAND_THEN_RELEVANCE = "expand_then_relevance"


# Stable substream indices; the baseline tally takes index 4.
_ARM_INDEX = {kind: i for i, kind in enumerate(ArmKind)}
_BASELINE_INDEX = 4
BASELINE_NAME = "baseline_relevance"


@dataclass(frozen=True)
class SimConfig:
    """One reproducible run: model parameters, accepted docs per arm, seed."""

    model: ModelParams
    n_per_arm: int
    seed: int

    def __post_init__(self):
        if self.n_per_arm < 1:
            raise ValueError("n_per_arm must be >= 1")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")


@dataclass(frozen=True)
class ArmTally:
    counts: ArmCounts
    draws_consumed: int


@dataclass(frozen=True)
class SimResult:
    """Tallies plus the derived empirical estimates of one run.

    ``arms`` maps each ArmKind to its tally, or to None if that arm starved
    (acceptance probability effectively zero).  Derived fields are None
    whenever an arm they depend on starved or the quantity is undefined.
    """

    config: SimConfig
    arms: Mapping[ArmKind, Optional[ArmTally]]
    baseline: Optional[ArmTally]
    rates: Optional[RateTriple]
    accardi_est: Optional[EstimateWithError]
    boost_est: Optional[EstimateWithError]

    def to_json_dict(self) -> dict:
        """Stable JSON form; field names are part of the interface."""
        model = self.config.model
        if isinstance(model, ClassicalParams):
            cfg_model = {
                "kind": "classical",
                "params": {"p": model.p, "q_r": model.q_r, "q_n": model.q_n},
            }
        else:
            cfg_model = {
                "kind": "quantum",
                "params": {"phi": model.phi, "alpha": model.alpha},
            }

        def tally(t: Optional[ArmTally]):
            if t is None:
                return None
            return {
                "n_total": t.counts.n_total,
                "n_success": t.counts.n_success,
                "draws_consumed": t.draws_consumed,
            }

        def est(e: Optional[EstimateWithError]):
            if e is None:
                return None
            return {"estimate": e.estimate, "std_error": e.std_error, "n": e.n}

        return {
            "config": {
                "model": cfg_model,
                "n_per_arm": self.config.n_per_arm,
                "seed": int(self.config.seed),
            },
            "arms": {kind.value: tally(self.arms[kind]) for kind in ArmKind},
            BASELINE_NAME: tally(self.baseline),
            "derived": {
                "rates": None
                if self.rates is None
                else {
                    "p_x_given_r": float(self.rates.p_x_given_r),
                    "p_x_given_n": float(self.rates.p_x_given_n),
                    "p_x": float(self.rates.p_x),
                },
                "accardi": est(self.accardi_est),
                "boost": est(self.boost_est),
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


# ---------------------------------------------------------------------------
# per-arm kernels
#
# Each document consumes exactly two uniforms (u0, u1); a step function maps
# them to (accepted, success) masks.  Constant consumption per document keeps
# the substream layout independent of the outcomes.
# ---------------------------------------------------------------------------

Step = Callable[[np.ndarray, np.ndarray], "tuple[np.ndarray, np.ndarray]"]


def _classical_step(params: ClassicalParams, kind: Optional[ArmKind]) -> Step:
    p, q_r, q_n = params.p, params.q_r, params.q_n

    if kind is ArmKind.COND_ON_RELEVANT:
        return lambda u0, u1: (u0 < p, u1 < q_r)
    if kind is ArmKind.COND_ON_NON_RELEVANT:
        return lambda u0, u1: (u0 >= p, u1 < q_n)
    if kind is ArmKind.DIRECT_TERM:
        # relevance is drawn but not checked; the term threshold still
        # depends on it, as in the urn
        def direct(u0, u1):
            thresh = np.where(u0 < p, q_r, q_n)
            return np.ones_like(u0, dtype=bool), u1 < thresh

        return direct
    if kind is ArmKind.EXPAND_THEN_RELEVANCE:
        def expand(u0, u1):
            rel = u0 < p
            has_term = u1 < np.where(rel, q_r, q_n)
            return has_term, rel

        return expand
    # baseline: unconditioned relevance tally
    return lambda u0, u1: (np.ones_like(u0, dtype=bool), u0 < p)


def _quantum_step(params: QuantumParams, kind: Optional[ArmKind]) -> Step:
    r = quantum_rates(params)
    p_r = float(r.p_r)
    p_x_r = float(r.p_x_given_r)
    p_x_n = float(r.p_x_given_n)
    p_x = float(r.p_x_direct)

    # Collapse rule: the second measurement's success probability depends
    # only on the eigenstate selected by the first, never on |q>.
    if kind is ArmKind.COND_ON_RELEVANT:
        return lambda u0, u1: (u0 < p_r, u1 < p_x_r)
    if kind is ArmKind.COND_ON_NON_RELEVANT:
        return lambda u0, u1: (u0 >= p_r, u1 < p_x_n)
    if kind is ArmKind.DIRECT_TERM:
        return lambda u0, u1: (np.ones_like(u0, dtype=bool), u1 < p_x)
    if kind is ArmKind.EXPAND_THEN_RELEVANCE:
        # after collapsing onto |X>, P(R) = |<R|X>|^2 = p_x_given_r
        return lambda u0, u1: (u0 < p_x, u1 < p_x_r)
    return lambda u0, u1: (np.ones_like(u0, dtype=bool), u0 < p_r)


def _arm_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence((int(seed), index)))


def _run_arm(
    rng: np.random.Generator, step: Step, n_target: int, arm_name: str
) -> ArmTally:
    max_draws = MAX_DRAWS_FACTOR * n_target
    accepted = 0
    successes = 0
    draws = 0
    while accepted < n_target and draws < max_draws:
        m = min(_CHUNK, max_draws - draws)
        u = rng.random((m, 2))
        acc, suc = step(u[:, 0], u[:, 1])
        hits = acc & suc
        cum = np.cumsum(acc)
        need = n_target - accepted
        total_acc = int(cum[-1]) if m else 0
        if total_acc >= need:
            stop = int(np.searchsorted(cum, need))  # index of need-th accept
            draws += stop + 1
            successes += int(np.count_nonzero(hits[: stop + 1]))
            accepted = n_target
        else:
            draws += m
            accepted += total_acc
            successes += int(np.count_nonzero(hits))
    if accepted < n_target:
        raise ArmStarvation(arm_name, accepted, n_target, draws)
    return ArmTally(ArmCounts(n_target, successes), draws)


def _step_for(model: ModelParams, kind: Optional[ArmKind]) -> Step:
    if isinstance(model, ClassicalParams):
        return _classical_step(model, kind)
    if isinstance(model, QuantumParams):
        return _quantum_step(model, kind)
    raise TypeError(f"unsupported model parameters: {model!r}")


def simulate_arm(
    model: ModelParams, kind: Optional[ArmKind], n_per_arm: int, seed: int
) -> ArmTally:
    """Simulate one arm in isolation.  ``kind=None`` runs the baseline
    relevance tally.  Raises ArmStarvation on a dead arm.

    Uses the same (seed, arm) substream as the full simulation, so an
    arm simulated alone is bit-identical to the same arm inside
    ``simulate_classical`` / ``simulate_quantum``.
    """
    if n_per_arm < 1:
        raise ValueError("n_per_arm must be >= 1")
    index = _BASELINE_INDEX if kind is None else _ARM_INDEX[kind]
    name = BASELINE_NAME if kind is None else kind.value
    rng = _arm_rng(seed, index)
    return _run_arm(rng, _step_for(model, kind), n_per_arm, name)


def _simulate(model: ModelParams, n_per_arm: int, seed: int) -> SimResult:
    config = SimConfig(model=model, n_per_arm=n_per_arm, seed=seed)

    arms: dict[ArmKind, Optional[ArmTally]] = {}
    for kind in ArmKind:
        try:
            arms[kind] = simulate_arm(model, kind, n_per_arm, seed)
        except ArmStarvation:
            arms[kind] = None
    try:
        baseline = simulate_arm(model, None, n_per_arm, seed)
    except ArmStarvation:
        baseline = None

    rates = None
    accardi_est = None
    boost_est = None

    t_r = arms[ArmKind.COND_ON_RELEVANT]
    t_n = arms[ArmKind.COND_ON_NON_RELEVANT]
    t_x = arms[ArmKind.DIRECT_TERM]
    if t_r is not None and t_n is not None and t_x is not None:
        rates = RateTriple(
            estimate_rate(t_r.counts).estimate,
            estimate_rate(t_n.counts).estimate,
            estimate_rate(t_x.counts).estimate,
        )
        try:
            accardi_est = accardi_from_counts(t_r.counts, t_n.counts, t_x.counts)
        except UndefinedQuantity:
            accardi_est = None

    t_e = arms[ArmKind.EXPAND_THEN_RELEVANCE]
    if t_e is not None and baseline is not None:
        result_stub = SimResult(config, arms, baseline, rates, None, None)
        try:
            boost_est = empirical_boost(result_stub, estimate_rate(baseline.counts))
        except UndefinedQuantity:
            boost_est = None

    return SimResult(config, arms, baseline, rates, accardi_est, boost_est)


def simulate_classical(
    params: ClassicalParams, n_per_arm: int, seed: int
) -> SimResult:
    """Urn model stream: per document, relevance ~ Bernoulli(p), then term
    occurrence ~ Bernoulli(q_r or q_n) conditional on relevance."""
    return _simulate(params, n_per_arm, seed)


def simulate_quantum(
    params: QuantumParams, n_per_arm: int, seed: int
) -> SimResult:
    """Spin-1/2 stream: each document arrives in |q>; measurements follow
    the Born rule with collapse between chained measurements."""
    return _simulate(params, n_per_arm, seed)


def empirical_boost(
    result: SimResult, baseline_p_r: EstimateWithError
) -> EstimateWithError:
    """Precision boost of the expansion arm against an unconditioned
    relevance baseline, with a delta-method standard error.

    Raises BoostUndefined when the baseline rate is effectively zero.
    """
    tally = result.arms[ArmKind.EXPAND_THEN_RELEVANCE]
    if tally is None:
        raise BoostUndefined("expansion arm starved; no posterior estimate")
    post = estimate_rate(tally.counts)
    b = baseline_p_r.estimate
    if b < EPS_DENOM:
        raise BoostUndefined(f"baseline P(R)={b} is effectively zero")
    delta = (post.estimate - b) / b
    var = (post.std_error / b) ** 2 + (
        post.estimate * baseline_p_r.std_error / b**2
    ) ** 2
    return EstimateWithError(
        estimate=delta, std_error=math.sqrt(var), n=post.n + baseline_p_r.n
    )
