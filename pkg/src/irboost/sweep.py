"""Parameter sweeps producing (A, Delta) scatter data, single-point
evaluation, empirical estimation from external count files, and the CSV /
JSON output layer.

Sampling domains are the minimal natural ones: classical (p, q_r, q_n)
iid uniform on [0, 1]^3; quantum (phi, alpha) iid uniform on [0, pi]^2.
Points within ``exclusion_margin`` of a singular manifold (|q_r - q_n|,
|cos alpha|, or P(R) too small) are emitted with validity flags set to
False rather than dropped, so a sweep stays an unbiased uniform sample and
summary fractions remain interpretable.

All parameter sampling happens up front from a single seeded generator and
Monte Carlo points use substreams keyed by (seed, point index), so results
are deterministic and independent of evaluation order.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from . import classical as cm
from . import quantum as qm
from .classical import ClassicalParams
from .errors import ArmStarvation, MalformedInput, UndefinedQuantity
from .probcore import EPS_DENOM, ArmCounts, EstimateWithError, accardi_from_counts
from .quantum import QuantumParams
from .stream import simulate_classical, simulate_quantum

Params = Union[ClassicalParams, QuantumParams]

CSV_HEADER = [
    "model",
    "param1",
    "param2",
    "param3",
    "a",
    "delta",
    "accardi_defined",
    "boost_defined",
]

DEFAULT_EXCLUSION_MARGIN = 1e-6


@dataclass(frozen=True)
class SweepConfig:
    model: str  # "classical" | "quantum"
    n_points: int
    seed: int
    mode: str = "analytic"  # "analytic" | "montecarlo"
    n_per_arm: int = 10_000
    exclusion_margin: float = DEFAULT_EXCLUSION_MARGIN

    def __post_init__(self):
        if self.model not in ("classical", "quantum"):
            raise ValueError(f"unknown model {self.model!r}")
        if self.mode not in ("analytic", "montecarlo"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.n_points < 1:
            raise ValueError("n_points must be >= 1")
        if self.n_per_arm < 1:
            raise ValueError("n_per_arm must be >= 1")
        if not 0.0 <= self.exclusion_margin < 0.5:
            raise ValueError("exclusion_margin must lie in [0, 0.5)")


@dataclass(frozen=True)
class ScatterPoint:
    """One (A, Delta) point; a/delta are NaN when the matching flag is False."""

    model: str
    params: Params
    a: float
    delta: float
    accardi_defined: bool
    boost_defined: bool


@dataclass(frozen=True)
class SweepSummary:
    """Aggregate view of one sweep.

    ``n_defined`` counts points with both validity flags set; the two
    fractions are taken over accardi-defined points.  The three maxima are
    over points with both flags set ("classical region" means 0 <= a <= 1,
    "violation" means a outside [0, 1]); NaN when the set is empty.
    """

    n_points: int
    n_defined: int
    fraction_a_below_0: float
    fraction_a_above_1: float
    max_delta: float
    max_delta_classical_region: float
    max_delta_violation: float


@dataclass(frozen=True)
class CountEstimate:
    """Empirical (A, Delta) from externally supplied counts, with errors."""

    point: ScatterPoint
    accardi: Optional[EstimateWithError]
    boost: Optional[EstimateWithError]


# ---------------------------------------------------------------------------
# sampling and analytic evaluation
# ---------------------------------------------------------------------------

def sample_params(config: SweepConfig) -> np.ndarray:
    """Uniform parameter matrix, one row per point (3 or 2 columns)."""
    rng = np.random.default_rng(config.seed)
    if config.model == "classical":
        return rng.random((config.n_points, 3))
    return rng.random((config.n_points, 2)) * math.pi


def _flags_classical(p, q_r, q_n, margin):
    m = max(margin, EPS_DENOM)
    denom = q_r * p + q_n * (1.0 - p)
    accardi_ok = np.abs(q_r - q_n) > m
    boost_ok = (p > m) & (denom >= EPS_DENOM)
    return accardi_ok, boost_ok, denom


def _flags_quantum(phi, alpha, margin):
    m = max(margin, EPS_DENOM)
    accardi_ok = np.abs(np.cos(alpha)) > m
    boost_ok = (1.0 + np.cos(phi)) / 2.0 > m
    return accardi_ok, boost_ok


def _analytic_points(config: SweepConfig, mat: np.ndarray) -> list[ScatterPoint]:
    if config.model == "classical":
        p, q_r, q_n = mat[:, 0], mat[:, 1], mat[:, 2]
        accardi_ok, boost_ok, denom = _flags_classical(
            p, q_r, q_n, config.exclusion_margin
        )
        a = np.where(accardi_ok, p, np.nan)
        with np.errstate(divide="ignore", invalid="ignore"):
            delta = np.where(boost_ok, (q_r - q_n) * (1.0 - p) / denom, np.nan)
        return [
            ScatterPoint(
                "classical",
                ClassicalParams(p[i], q_r[i], q_n[i]),
                float(a[i]),
                float(delta[i]),
                bool(accardi_ok[i]),
                bool(boost_ok[i]),
            )
            for i in range(len(p))
        ]

    phi, alpha = mat[:, 0], mat[:, 1]
    accardi_ok, boost_ok = _flags_quantum(phi, alpha, config.exclusion_margin)
    ca = np.cos(alpha)
    cp = np.cos(phi)
    with np.errstate(divide="ignore", invalid="ignore"):
        a = np.where(accardi_ok, 0.5 * (1.0 + np.cos(phi - alpha) / ca), np.nan)
        delta = np.where(boost_ok, (ca - cp) / (1.0 + cp), np.nan)
    return [
        ScatterPoint(
            "quantum",
            QuantumParams(phi[i], alpha[i]),
            float(a[i]),
            float(delta[i]),
            bool(accardi_ok[i]),
            bool(boost_ok[i]),
        )
        for i in range(len(phi))
    ]


def _point_seed(seed: int, index: int) -> int:
    return int(np.random.SeedSequence((int(seed), index)).generate_state(1)[0])


def _montecarlo_point(
    params: Params, n_per_arm: int, seed: int, margin: float
) -> ScatterPoint:
    if isinstance(params, ClassicalParams):
        model = "classical"
        accardi_ok, boost_ok, _ = _flags_classical(
            np.float64(params.p), np.float64(params.q_r), np.float64(params.q_n),
            margin,
        )
    else:
        model = "quantum"
        accardi_ok, boost_ok = _flags_quantum(
            np.float64(params.phi), np.float64(params.alpha), margin
        )
    if not (accardi_ok or boost_ok):
        return ScatterPoint(model, params, math.nan, math.nan, False, False)

    try:
        if isinstance(params, ClassicalParams):
            result = simulate_classical(params, n_per_arm, seed)
        else:
            result = simulate_quantum(params, n_per_arm, seed)
    except ArmStarvation:
        return ScatterPoint(model, params, math.nan, math.nan, False, False)

    a_est = result.accardi_est if accardi_ok else None
    b_est = result.boost_est if boost_ok else None
    return ScatterPoint(
        model,
        params,
        a_est.estimate if a_est is not None else math.nan,
        b_est.estimate if b_est is not None else math.nan,
        a_est is not None,
        b_est is not None,
    )


def summarize(points: Sequence[ScatterPoint]) -> SweepSummary:
    a = np.array([pt.a for pt in points])
    delta = np.array([pt.delta for pt in points])
    a_ok = np.array([pt.accardi_defined for pt in points], dtype=bool)
    b_ok = np.array([pt.boost_defined for pt in points], dtype=bool)

    both = a_ok & b_ok
    n_a = int(np.count_nonzero(a_ok))
    below = int(np.count_nonzero(a_ok & (a < 0.0)))
    above = int(np.count_nonzero(a_ok & (a > 1.0)))

    def _max(mask):
        return float(np.max(delta[mask])) if np.any(mask) else math.nan

    classical_region = both & (a >= 0.0) & (a <= 1.0)
    violation = both & ((a < 0.0) | (a > 1.0))
    return SweepSummary(
        n_points=len(points),
        n_defined=int(np.count_nonzero(both)),
        fraction_a_below_0=below / n_a if n_a else math.nan,
        fraction_a_above_1=above / n_a if n_a else math.nan,
        max_delta=_max(both),
        max_delta_classical_region=_max(classical_region),
        max_delta_violation=_max(violation),
    )


def sweep(config: SweepConfig) -> "tuple[list[ScatterPoint], SweepSummary]":
    """Uniform parameter sweep; deterministic given the config."""
    mat = sample_params(config)
    if config.mode == "analytic":
        points = _analytic_points(config, mat)
    else:
        points = []
        for i in range(config.n_points):
            if config.model == "classical":
                params: Params = ClassicalParams(*mat[i])
            else:
                params = QuantumParams(*mat[i])
            points.append(
                _montecarlo_point(
                    params,
                    config.n_per_arm,
                    _point_seed(config.seed, i),
                    config.exclusion_margin,
                )
            )
    return points, summarize(points)


def eval_point(
    params: Params,
    mode: str = "analytic",
    n_per_arm: int = 10_000,
    seed: int = 0,
    exclusion_margin: float = DEFAULT_EXCLUSION_MARGIN,
) -> ScatterPoint:
    """Evaluate one parameter point; semantics of a sweep of size 1."""
    if mode == "montecarlo":
        return _montecarlo_point(params, n_per_arm, seed, exclusion_margin)

    if isinstance(params, ClassicalParams):
        model = "classical"
        a_fn, d_fn = cm.accardi_classical, cm.boost_classical
    elif isinstance(params, QuantumParams):
        model = "quantum"
        a_fn, d_fn = qm.accardi_quantum, qm.boost_quantum
    else:
        raise TypeError(f"unsupported parameters: {params!r}")

    try:
        a, a_ok = a_fn(params), True
    except UndefinedQuantity:
        a, a_ok = math.nan, False
    try:
        delta, d_ok = d_fn(params), True
    except UndefinedQuantity:
        delta, d_ok = math.nan, False
    return ScatterPoint(model, params, a, delta, a_ok, d_ok)


# ---------------------------------------------------------------------------
# external count files
# ---------------------------------------------------------------------------

def parse_count_file(path) -> "tuple[int, int, int, int, int]":
    """Read the five counts N N_R N_XR N_XN N_X from a plain-text file.

    Whitespace-separated (newlines allowed), '#' comment lines ignored.
    Raises MalformedInput on parse or consistency failure.
    """
    tokens: list[str] = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            tokens.extend(stripped.split())
    if len(tokens) != 5:
        raise MalformedInput(
            f"expected 5 counts (N N_R N_XR N_XN N_X), got {len(tokens)} tokens"
        )
    try:
        n, n_r, n_xr, n_xn, n_x = (int(t) for t in tokens)
    except ValueError as exc:
        raise MalformedInput(f"non-integer count in {path}: {exc}") from None
    if min(n, n_r, n_xr, n_xn, n_x) < 0:
        raise MalformedInput("counts must be nonnegative")
    if n == 0:
        raise MalformedInput("N must be positive")
    if n_r > n:
        raise MalformedInput(f"N_R={n_r} exceeds N={n}")
    if n_xr > n_r:
        raise MalformedInput(f"N_XR={n_xr} exceeds N_R={n_r}")
    if n_xn > n - n_r:
        raise MalformedInput(f"N_XN={n_xn} exceeds N - N_R={n - n_r}")
    if n_x > n:
        raise MalformedInput(f"N_X={n_x} exceeds N={n}")
    if n_r == 0 or n_r == n:
        raise MalformedInput(
            "both relevance classes must be populated to form conditional rates"
        )
    return n, n_r, n_xr, n_xn, n_x


def estimate_from_file(path) -> CountEstimate:
    """Empirical (A, Delta) with standard errors from a five-count file.

    A comes from the Accardi ratio on the three empirical rates; Delta from
    the Bayes-posterior route on (p, q_r, q_n) = (N_R/N, N_XR/N_R,
    N_XN/(N-N_R)).  Undefined quantities are flagged, not fatal.
    """
    n, n_r, n_xr, n_xn, n_x = parse_count_file(path)
    n_nr = n - n_r

    p = n_r / n
    q_r = n_xr / n_r
    q_n = n_xn / n_nr
    params = ClassicalParams(p, q_r, q_n)

    try:
        acc = accardi_from_counts(
            ArmCounts(n_r, n_xr), ArmCounts(n_nr, n_xn), ArmCounts(n, n_x)
        )
    except UndefinedQuantity:
        acc = None

    bst: Optional[EstimateWithError] = None
    denom = q_r * p + q_n * (1.0 - p)
    if p >= EPS_DENOM and denom >= EPS_DENOM:
        delta = q_r / denom - 1.0
        # delta method on independent binomial rates
        se_p = math.sqrt(p * (1.0 - p) / n)
        se_qr = math.sqrt(q_r * (1.0 - q_r) / n_r)
        se_qn = math.sqrt(q_n * (1.0 - q_n) / n_nr)
        d_qr = q_n * (1.0 - p) / denom**2
        d_qn = -q_r * (1.0 - p) / denom**2
        d_p = -q_r * (q_r - q_n) / denom**2
        var = (d_qr * se_qr) ** 2 + (d_qn * se_qn) ** 2 + (d_p * se_p) ** 2
        bst = EstimateWithError(delta, math.sqrt(var), n)

    point = ScatterPoint(
        model="empirical",
        params=params,
        a=acc.estimate if acc is not None else math.nan,
        delta=bst.estimate if bst is not None else math.nan,
        accardi_defined=acc is not None,
        boost_defined=bst is not None,
    )
    return CountEstimate(point=point, accardi=acc, boost=bst)


# ---------------------------------------------------------------------------
# output layer
# ---------------------------------------------------------------------------

def _fmt(x: float) -> str:
    # 17 significant digits: lossless float round-trip
    return "" if math.isnan(x) else format(x, ".17g")


def _point_row(pt: ScatterPoint) -> list[str]:
    if isinstance(pt.params, QuantumParams):
        p1, p2, p3 = _fmt(pt.params.phi), _fmt(pt.params.alpha), ""
    else:
        p1, p2, p3 = (
            _fmt(pt.params.p),
            _fmt(pt.params.q_r),
            _fmt(pt.params.q_n),
        )
    return [
        pt.model,
        p1,
        p2,
        p3,
        _fmt(pt.a),
        _fmt(pt.delta),
        "true" if pt.accardi_defined else "false",
        "true" if pt.boost_defined else "false",
    ]


def write_csv(points: Iterable[ScatterPoint], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for pt in points:
        writer.writerow(_point_row(pt))


def export_csv(points: Iterable[ScatterPoint], path) -> None:
    """Write scatter points as CSV (header mandatory, 17-digit floats)."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        write_csv(points, fh)


def read_csv(path) -> list[ScatterPoint]:
    """Parse a file written by ``export_csv``; exact value round-trip."""
    points = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != CSV_HEADER:
            raise MalformedInput(f"unexpected CSV header: {header!r}")
        for row in reader:
            if len(row) != len(CSV_HEADER):
                raise MalformedInput(f"bad CSV row: {row!r}")
            model, p1, p2, p3, a, delta, a_ok, b_ok = row
            if model == "quantum":
                params: Params = QuantumParams(float(p1), float(p2))
            else:
                params = ClassicalParams(float(p1), float(p2), float(p3))
            points.append(
                ScatterPoint(
                    model,
                    params,
                    float(a) if a else math.nan,
                    float(delta) if delta else math.nan,
                    a_ok == "true",
                    b_ok == "true",
                )
            )
    return points


def write_gnuplot(points: Iterable[ScatterPoint], stream) -> None:
    """Two-column 'a delta' rows for points with both flags set."""
    stream.write("# a delta\n")
    for pt in points:
        if pt.accardi_defined and pt.boost_defined:
            stream.write(f"{_fmt(pt.a)} {_fmt(pt.delta)}\n")


def points_to_json_dict(
    points: Sequence[ScatterPoint], summary: Optional[SweepSummary] = None
) -> dict:
    """JSON payload mirroring the CSV fields, plus the sweep summary."""

    def _val(x: float):
        return None if math.isnan(x) else x

    out: dict = {
        "points": [
            {
                "model": pt.model,
                "params": (
                    {"phi": pt.params.phi, "alpha": pt.params.alpha}
                    if isinstance(pt.params, QuantumParams)
                    else {
                        "p": pt.params.p,
                        "q_r": pt.params.q_r,
                        "q_n": pt.params.q_n,
                    }
                ),
                "a": _val(pt.a),
                "delta": _val(pt.delta),
                "accardi_defined": pt.accardi_defined,
                "boost_defined": pt.boost_defined,
            }
            for pt in points
        ]
    }
    if summary is not None:
        out["summary"] = {
            "n_points": summary.n_points,
            "n_defined": summary.n_defined,
            "fraction_a_below_0": _val(summary.fraction_a_below_0),
            "fraction_a_above_1": _val(summary.fraction_a_above_1),
            "max_delta": _val(summary.max_delta),
            "max_delta_classical_region": _val(summary.max_delta_classical_region),
            "max_delta_violation": _val(summary.max_delta_violation),
        }
    return out
