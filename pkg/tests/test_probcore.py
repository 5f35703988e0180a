import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from irboost import (
    AccardiUndefined,
    ArmCounts,
    BoostUndefined,
    EmptyArm,
    Probability,
    RateTriple,
    accardi,
    accardi_from_counts,
    boost,
    estimate_rate,
    total_probability,
)

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


class TestProbability:
    def test_accepts_bounds(self):
        assert Probability(0.0) == 0.0
        assert Probability(1.0) == 1.0
        assert Probability(0.25) == 0.25

    @pytest.mark.parametrize("bad", [-0.001, 1.001, float("nan"), float("inf")])
    def test_rejects_out_of_range(self, bad):
        with pytest.raises(ValueError):
            Probability(bad)

    def test_is_a_float(self):
        assert isinstance(Probability(0.5), float)


class TestArmCounts:
    def test_rejects_success_above_total(self):
        with pytest.raises(ValueError):
            ArmCounts(n_total=3, n_success=4)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            ArmCounts(n_total=-1, n_success=0)


class TestAccardi:
    def test_unit_denominator(self):
        assert accardi(RateTriple(1.0, 0.0, 0.7)) == pytest.approx(0.7, abs=1e-15)

    def test_hand_arithmetic(self):
        # (0.5 - 0.2) / (0.8 - 0.2)
        assert accardi(RateTriple(0.8, 0.2, 0.5)) == pytest.approx(0.5, abs=1e-15)

    def test_zero_denominator(self):
        with pytest.raises(AccardiUndefined):
            accardi(RateTriple(0.5, 0.5, 0.5))

    # When the law of total probability holds, A recovers P(R).  The
    # tolerance is reachable only away from the q_r = q_n manifold: the
    # float rounding of the mixture is amplified by 1/|q_r - q_n|.
    @given(
        p=unit,
        rates=st.tuples(unit, unit).filter(lambda t: abs(t[0] - t[1]) >= 1e-3),
    )
    @settings(max_examples=500)
    def test_recovers_prior_under_total_probability(self, p, rates):
        q_r, q_n = rates
        p_x = total_probability(q_r, q_n, p)
        assert accardi(RateTriple(q_r, q_n, p_x)) == pytest.approx(p, abs=1e-12)


class TestBoost:
    def test_hand_arithmetic(self):
        assert boost(0.8, 0.5) == pytest.approx(0.6, abs=1e-15)

    @given(p=st.floats(min_value=1e-6, max_value=1.0))
    def test_no_change_is_zero(self, p):
        assert boost(p, p) == 0.0

    def test_zero_prior(self):
        with pytest.raises(BoostUndefined):
            boost(0.3, 0.0)

    def test_can_be_negative(self):
        assert boost(0.2, 0.5) < 0.0


class TestTotalProbability:
    def test_hand_arithmetic(self):
        assert total_probability(0.8, 0.2, 0.5) == pytest.approx(0.5, abs=1e-15)

    @given(q=unit, p=unit)
    def test_independence_collapses(self, q, p):
        assert total_probability(q, q, p) == pytest.approx(q, abs=1e-15)

    @given(p=unit)
    def test_perfect_correlation(self, p):
        assert total_probability(1.0, 0.0, p) == p

    @given(q_r=unit, q_n=unit, p=unit)
    @settings(max_examples=500)
    def test_output_in_unit_interval(self, q_r, q_n, p):
        v = total_probability(q_r, q_n, p)
        assert 0.0 <= v <= 1.0


class TestEstimateRate:
    def test_all_success_degenerate(self):
        est = estimate_rate(ArmCounts(10, 10))
        assert est.estimate == 1.0
        assert est.std_error == 0.0

    def test_all_failure_degenerate(self):
        est = estimate_rate(ArmCounts(10, 0))
        assert est.estimate == 0.0
        assert est.std_error == 0.0

    def test_quarter(self):
        est = estimate_rate(ArmCounts(4, 1))
        assert est.estimate == 0.25
        assert est.n == 4

    def test_wald_error(self):
        est = estimate_rate(ArmCounts(100, 30))
        assert est.std_error == pytest.approx(math.sqrt(0.3 * 0.7 / 100))

    def test_empty_arm(self):
        with pytest.raises(EmptyArm):
            estimate_rate(ArmCounts(0, 0))


class TestAccardiFromCounts:
    def test_matches_point_estimates(self):
        est = accardi_from_counts(
            ArmCounts(1000, 1000), ArmCounts(1000, 0), ArmCounts(1000, 700)
        )
        assert est.estimate == pytest.approx(0.7, abs=1e-15)

    def test_equals_accardi_of_rates_exactly(self):
        arm_r, arm_n, arm_x = ArmCounts(40, 31), ArmCounts(60, 11), ArmCounts(50, 27)
        est = accardi_from_counts(arm_r, arm_n, arm_x)
        rates = RateTriple(31 / 40, 11 / 60, 27 / 50)
        assert est.estimate == accardi(rates)

    def test_identical_rates_undefined(self):
        with pytest.raises(AccardiUndefined):
            accardi_from_counts(
                ArmCounts(10, 5), ArmCounts(10, 5), ArmCounts(10, 5)
            )

    def test_empty_direct_arm(self):
        with pytest.raises(EmptyArm):
            accardi_from_counts(
                ArmCounts(10, 5), ArmCounts(10, 2), ArmCounts(0, 0)
            )

    def test_error_shrinks_with_n(self):
        small = accardi_from_counts(
            ArmCounts(100, 80), ArmCounts(100, 20), ArmCounts(100, 50)
        )
        large = accardi_from_counts(
            ArmCounts(10_000, 8_000), ArmCounts(10_000, 2_000), ArmCounts(10_000, 5_000)
        )
        assert large.std_error < small.std_error
