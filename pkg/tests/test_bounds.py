import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hhfact.bounds import plan_columns, theta_bound, u_recovery_bound


class TestThetaBound:
    def test_reference_value(self):
        # 2 * exp(-2 * 0.05^2 * 50 * 20) = 2 * exp(-5)
        assert theta_bound(50, 20, 0.05) == pytest.approx(2.0 * math.exp(-5.0), rel=1e-12)

    def test_large_threshold_vanishes(self):
        assert theta_bound(1, 1, 50.0) < 1e-300

    def test_clamped_to_probability_range(self):
        assert theta_bound(1, 1, 1e-9) == 1.0

    @given(
        st.integers(min_value=1, max_value=10**4),
        st.integers(min_value=1, max_value=10**4),
        st.floats(min_value=1e-6, max_value=10.0),
    )
    @settings(max_examples=100, deadline=None)
    def test_always_a_probability(self, n, p, t):
        assert 0.0 <= theta_bound(n, p, t) <= 1.0

    def test_monotone_in_each_argument(self):
        base = theta_bound(50, 20, 0.05)
        assert theta_bound(100, 20, 0.05) <= base
        assert theta_bound(50, 40, 0.05) <= base
        assert theta_bound(50, 20, 0.1) <= base


class TestURecoveryBound:
    def test_reference_value(self):
        # 2000 * exp(-8 * 0.05^2 * 1 * 0.4^2 * 1e4) = 2000 * exp(-32)
        assert u_recovery_bound(1000, 10**4, 0.4, 1.0, 0.05) == pytest.approx(
            2000.0 * math.exp(-32.0), rel=1e-12
        )

    def test_no_columns_gives_vacuous_bound(self):
        assert u_recovery_bound(3, 0, 0.4, 1.0, 0.1) == 1.0

    def test_doubling_columns_squares_the_tail(self):
        # holds for the raw tail, so pick parameters where nothing clamps
        n, theta, c, t = 50, 0.3, 0.7, 0.3
        b1 = u_recovery_bound(n, 400, theta, c, t) / (2 * n)
        b2 = u_recovery_bound(n, 800, theta, c, t) / (2 * n)
        assert b1 < 1e-2
        assert b2 == pytest.approx(b1 * b1, rel=1e-9)

    def test_zero_entry_sum_rejected(self):
        with pytest.raises(ValueError, match="nonzero"):
            u_recovery_bound(10, 10, 0.5, 0.0, 0.1)

    def test_sign_of_entry_sum_is_irrelevant(self):
        assert u_recovery_bound(10, 10, 0.5, -0.4, 0.1) == u_recovery_bound(
            10, 10, 0.5, 0.4, 0.1
        )

    @given(
        st.integers(min_value=1, max_value=2000),
        st.integers(min_value=0, max_value=10**5),
        st.floats(min_value=0.01, max_value=0.99),
        st.floats(min_value=0.01, max_value=10.0),
        st.floats(min_value=1e-4, max_value=2.0),
    )
    @settings(max_examples=100, deadline=None)
    def test_always_a_probability_and_monotone(self, n, p, theta, c, t):
        v = u_recovery_bound(n, p, theta, c, t)
        assert 0.0 <= v <= 1.0
        assert u_recovery_bound(n, p + 100, theta, c, t) <= v
        assert u_recovery_bound(n + 1, p, theta, c, t) >= v


class TestPlanColumns:
    def test_reference_value(self):
        # ceil(log(2e6) / (8 * 0.0025 * 0.16 * 1)) = ceil(4533.955...) = 4534
        assert plan_columns(1000, 0.4, 1.0, 0.05) == 4534

    def test_acceptance_regime_value(self):
        assert plan_columns(100, 0.4, 0.5, 0.1) == 3095

    def test_doubling_t_quarters_p(self):
        p1 = plan_columns(500, 0.3, 0.8, 0.05)
        p2 = plan_columns(500, 0.3, 0.8, 0.1)
        assert abs(p1 - 4 * p2) <= 4

    @given(
        st.integers(min_value=2, max_value=5000),
        st.floats(min_value=0.05, max_value=0.95),
        st.floats(min_value=0.05, max_value=3.0),
        st.floats(min_value=0.01, max_value=1.0),
    )
    @settings(max_examples=100, deadline=None)
    def test_inverts_the_bound(self, n, theta, c, t):
        p = plan_columns(n, theta, c, t)
        assert u_recovery_bound(n, p, theta, c, t) <= 1.0 / n
        if p > 1:
            # one column less, and the unclamped tail exceeds the target
            raw = 2.0 * n * math.exp(-8.0 * t * t * c * c * theta * theta * (p - 1))
            assert raw > 1.0 / n or math.isclose(raw, 1.0 / n, rel_tol=1e-9)

    def test_zero_entry_sum_rejected(self):
        with pytest.raises(ValueError):
            plan_columns(10, 0.5, 0.0, 0.1)
