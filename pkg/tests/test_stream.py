import json
import math

import numpy as np
import pytest

from irboost import (
    ArmKind,
    ArmStarvation,
    BoostUndefined,
    ClassicalParams,
    EstimateWithError,
    QuantumParams,
    empirical_boost,
    estimate_rate,
    simulate_arm,
    simulate_classical,
    simulate_quantum,
    total_probability,
)
from irboost.quantum import quantum_rates
from irboost.stream import BASELINE_NAME


class TestDeterminism:
    def test_classical_bit_identical(self):
        params = ClassicalParams(0.4, 0.7, 0.3)
        r1 = simulate_classical(params, 500, seed=123)
        r2 = simulate_classical(params, 500, seed=123)
        assert r1 == r2

    def test_quantum_bit_identical(self):
        params = QuantumParams(1.1, 0.6)
        r1 = simulate_quantum(params, 500, seed=99)
        r2 = simulate_quantum(params, 500, seed=99)
        assert r1 == r2

    def test_different_seed_differs(self):
        params = ClassicalParams(0.4, 0.7, 0.3)
        r1 = simulate_classical(params, 500, seed=1)
        r2 = simulate_classical(params, 500, seed=2)
        assert [r1.arms[k] for k in ArmKind] != [r2.arms[k] for k in ArmKind]

    def test_arm_isolated_equals_arm_in_full_run(self):
        # per-arm substreams: simulating one arm alone, or all arms in any
        # order, gives identical tallies
        params = QuantumParams(0.9, 2.0)
        full = simulate_quantum(params, 300, seed=7)
        for kind in reversed(ArmKind):
            assert simulate_arm(params, kind, 300, seed=7) == full.arms[kind]
        assert simulate_arm(params, None, 300, seed=7) == full.baseline


class TestClassicalStream:
    def test_deterministic_urn(self):
        params = ClassicalParams(1.0, 1.0, 0.3)
        res = simulate_classical(params, 100, seed=5)
        cr = res.arms[ArmKind.COND_ON_RELEVANT]
        dt = res.arms[ArmKind.DIRECT_TERM]
        assert (cr.counts.n_total, cr.counts.n_success) == (100, 100)
        assert (dt.counts.n_total, dt.counts.n_success) == (100, 100)
        # p = 1: the non-relevant arm can never accept
        assert res.arms[ArmKind.COND_ON_NON_RELEVANT] is None

    def test_direct_term_rate_near_mixture(self):
        params = ClassicalParams(0.5, 0.8, 0.2)
        n = 100_000
        res = simulate_classical(params, n, seed=314)
        rate = res.arms[ArmKind.DIRECT_TERM].counts.n_success / n
        assert abs(rate - 0.5) <= 4 * math.sqrt(0.25 / n)

    def test_starvation(self):
        with pytest.raises(ArmStarvation):
            simulate_arm(
                ClassicalParams(0.0, 0.5, 0.5), ArmKind.COND_ON_RELEVANT, 10, seed=1
            )

    def test_acceptance_semantics(self):
        # arms run until n accepted; draws_consumed records the latency cost
        params = ClassicalParams(0.25, 0.9, 0.1)
        res = simulate_classical(params, 2_000, seed=11)
        cr = res.arms[ArmKind.COND_ON_RELEVANT]
        assert cr.counts.n_total == 2_000
        assert cr.draws_consumed >= 2_000
        # roughly 1/p more raw draws than accepted documents
        assert 2_000 / 0.25 * 0.7 < cr.draws_consumed < 2_000 / 0.25 * 1.4

    def test_convergence_all_arms(self):
        params = ClassicalParams(0.6, 0.7, 0.2)
        n = 10_000
        expected = {
            ArmKind.COND_ON_RELEVANT: 0.7,
            ArmKind.COND_ON_NON_RELEVANT: 0.2,
            ArmKind.DIRECT_TERM: total_probability(0.7, 0.2, 0.6),
            ArmKind.EXPAND_THEN_RELEVANCE: 0.7 * 0.6 / total_probability(0.7, 0.2, 0.6),
        }
        failures = 0
        n_seeds = 100
        for seed in range(n_seeds):
            res = simulate_classical(params, n, seed=seed)
            for kind, truth in expected.items():
                est = estimate_rate(res.arms[kind].counts)
                se = max(est.std_error, 1e-12)
                if abs(est.estimate - truth) > 4 * se:
                    failures += 1
        assert failures <= 0.01 * n_seeds * len(expected) + 1


class TestQuantumStream:
    def test_eigenstate_chain(self):
        params = QuantumParams(0.0, 0.0)
        res = simulate_quantum(params, 100, seed=3)
        for kind in (
            ArmKind.COND_ON_RELEVANT,
            ArmKind.DIRECT_TERM,
            ArmKind.EXPAND_THEN_RELEVANCE,
        ):
            tally = res.arms[kind]
            assert (tally.counts.n_total, tally.counts.n_success) == (100, 100)
        assert res.arms[ArmKind.COND_ON_NON_RELEVANT] is None

    def test_diagonal_direct_term_saturates(self):
        # |X> = |q>: every direct draw succeeds
        res = simulate_quantum(QuantumParams(math.pi / 2, math.pi / 2), 10_000, seed=8)
        assert res.arms[ArmKind.DIRECT_TERM].counts.n_success == 10_000

    def test_orthogonal_query_starves_relevance_arm(self):
        with pytest.raises(ArmStarvation):
            simulate_arm(
                QuantumParams(math.pi, 0.5), ArmKind.COND_ON_RELEVANT, 10, seed=1
            )

    def test_empirical_accardi_near_closed_form(self):
        params = QuantumParams(math.pi / 3, math.pi / 4)
        res = simulate_quantum(params, 100_000, seed=2718)
        est = res.accardi_est
        assert abs(est.estimate - 1.1830127018922192) <= 4 * est.std_error

    def test_interference_detectable(self):
        # direct rate deviates from the total-probability mixture by the
        # interference gap, far beyond sampling noise at the maximal point
        params = QuantumParams(math.pi / 2, math.pi / 2)
        n = 10_000
        res = simulate_quantum(params, n, seed=5)
        r = quantum_rates(params)
        mixture = total_probability(r.p_x_given_r, r.p_x_given_n, r.p_r)
        rate = res.arms[ArmKind.DIRECT_TERM].counts.n_success / n
        assert rate - mixture == pytest.approx(0.5, abs=1e-12)

    def test_posterior_ignores_query_angle(self):
        # expansion-arm success probability is set by alpha alone
        n = 50_000
        res1 = simulate_quantum(QuantumParams(0.4, 1.0), n, seed=77)
        res2 = simulate_quantum(QuantumParams(2.6, 1.0), n, seed=78)
        e1 = estimate_rate(res1.arms[ArmKind.EXPAND_THEN_RELEVANCE].counts)
        e2 = estimate_rate(res2.arms[ArmKind.EXPAND_THEN_RELEVANCE].counts)
        se = math.hypot(e1.std_error, e2.std_error)
        assert abs(e1.estimate - e2.estimate) <= 4 * se


class TestEmpiricalBoost:
    def _result(self, params=ClassicalParams(0.5, 0.8, 0.2), n=20_000, seed=0):
        return simulate_classical(params, n, seed)

    def test_matches_hand_arithmetic(self):
        res = self._result()
        baseline = EstimateWithError(0.5, 0.0, 10)
        fake = EstimateWithError(0.8, 0.0, 10)
        exp_rate = estimate_rate(res.arms[ArmKind.EXPAND_THEN_RELEVANCE].counts)
        est = empirical_boost(res, baseline)
        assert est.estimate == pytest.approx((exp_rate.estimate - 0.5) / 0.5)
        assert (fake.estimate - baseline.estimate) / baseline.estimate == pytest.approx(0.6)

    def test_equal_rates_zero(self):
        res = self._result()
        exp_rate = estimate_rate(res.arms[ArmKind.EXPAND_THEN_RELEVANCE].counts)
        est = empirical_boost(res, exp_rate)
        assert est.estimate == 0.0

    def test_zero_baseline_undefined(self):
        res = self._result()
        with pytest.raises(BoostUndefined):
            empirical_boost(res, EstimateWithError(0.0, 0.0, 10))

    def test_derived_boost_near_closed_form(self):
        res = self._result(n=100_000, seed=412)
        est = res.boost_est
        assert abs(est.estimate - 0.6) <= 4 * est.std_error


class TestJsonInterface:
    def test_schema_fields(self):
        res = simulate_classical(ClassicalParams(0.5, 0.8, 0.2), 1_000, seed=4)
        doc = json.loads(res.to_json())
        assert doc["config"]["model"]["kind"] == "classical"
        assert doc["config"]["model"]["params"] == {"p": 0.5, "q_r": 0.8, "q_n": 0.2}
        assert doc["config"]["n_per_arm"] == 1_000
        assert doc["config"]["seed"] == 4
        assert set(doc["arms"]) == {k.value for k in ArmKind}
        for tally in doc["arms"].values():
            assert set(tally) == {"n_total", "n_success", "draws_consumed"}
            assert tally["n_total"] == 1_000
        assert set(doc[BASELINE_NAME]) == {"n_total", "n_success", "draws_consumed"}
        assert set(doc["derived"]) == {"rates", "accardi", "boost"}
        assert set(doc["derived"]["rates"]) == {"p_x_given_r", "p_x_given_n", "p_x"}
        assert set(doc["derived"]["accardi"]) == {"estimate", "std_error", "n"}

    def test_starved_arm_serializes_as_null(self):
        res = simulate_classical(ClassicalParams(1.0, 0.9, 0.5), 50, seed=4)
        doc = json.loads(res.to_json())
        assert doc["arms"][ArmKind.COND_ON_NON_RELEVANT.value] is None
        assert doc["derived"]["rates"] is None

    def test_quantum_params_echoed(self):
        res = simulate_quantum(QuantumParams(1.0, 0.5), 100, seed=0)
        doc = json.loads(res.to_json())
        assert doc["config"]["model"] == {
            "kind": "quantum",
            "params": {"phi": 1.0, "alpha": 0.5},
        }
