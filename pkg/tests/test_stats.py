"""Summary statistics, F/t tests against quadrature oracles, delta percent."""

import math

import pytest

from eea.stats import (
    SampleStats,
    compare_samples,
    delta_percent,
    f_test,
    summarize,
    t_test,
)
from statdist import f_upper_tail, t_two_tailed_p

# fixed sample fixtures
EIGHT = [2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0]
A = [12.1, 14.3, 11.8, 13.5, 12.9, 14.0, 13.2, 12.4]
B = [11.2, 12.8, 11.9, 12.3, 12.0, 11.5, 12.6, 11.8]
WIDE = [20.0, 30.0, 25.0, 35.0, 28.0, 22.0, 31.0, 27.0, 24.0, 33.0]
NARROW = [26.1, 26.4, 25.9, 26.2, 26.0, 26.3]


class TestSummarize:
    def test_hand_mean_and_stddev(self):
        stats = summarize(EIGHT)
        assert stats.n == 8
        assert stats.mean == 5.0
        # sample variance 32/7
        assert stats.stddev == pytest.approx(math.sqrt(32.0 / 7.0), abs=1e-15)

    def test_insufficient_data(self):
        with pytest.raises(ValueError, match="2 samples"):
            summarize([1.0])

    def test_constant_sample(self):
        stats = summarize([3.0, 3.0, 3.0])
        assert stats.mean == 3.0
        assert stats.stddev == 0.0


class TestFTest:
    def test_matches_quadrature_oracle(self):
        a, b = summarize(A), summarize(B)
        ratio = max(a.stddev, b.stddev) ** 2 / min(a.stddev, b.stddev) ** 2
        expected = min(1.0, 2.0 * f_upper_tail(ratio, a.n - 1, b.n - 1))
        assert f_test(a, b) == pytest.approx(expected, abs=1e-6)

    def test_matches_oracle_unequal_sizes(self):
        a, b = summarize(WIDE), summarize(NARROW)
        ratio = a.stddev**2 / b.stddev**2
        expected = min(1.0, 2.0 * f_upper_tail(ratio, a.n - 1, b.n - 1))
        assert f_test(a, b) == pytest.approx(expected, abs=1e-6)

    def test_symmetric_in_arguments(self):
        a, b = summarize(WIDE), summarize(NARROW)
        assert f_test(a, b) == pytest.approx(f_test(b, a), abs=1e-12)

    def test_identical_samples_give_one(self):
        a = summarize(A)
        assert f_test(a, summarize(A)) == 1.0

    def test_degenerate_sample_against_spread_one(self):
        constant = summarize([5.0, 5.0, 5.0])
        assert f_test(constant, summarize(A)) == 0.0
        assert f_test(constant, summarize([7.0, 7.0])) == 1.0


class TestTTest:
    def test_pooled_matches_quadrature_oracle(self):
        a, b = summarize(A), summarize(B)
        # independent recomputation of the pooled statistic
        va, vb = a.stddev**2, b.stddev**2
        pooled = ((a.n - 1) * va + (b.n - 1) * vb) / (a.n + b.n - 2)
        t_expected = (a.mean - b.mean) / math.sqrt(pooled * (1 / a.n + 1 / b.n))
        p_expected = t_two_tailed_p(t_expected, a.n + b.n - 2)
        t, p = t_test(a, b, equal_var=True)
        assert t == pytest.approx(t_expected, abs=1e-12)
        assert p == pytest.approx(p_expected, abs=1e-6)

    def test_welch_matches_quadrature_oracle(self):
        a, b = summarize(WIDE), summarize(NARROW)
        sa, sb = a.stddev**2 / a.n, b.stddev**2 / b.n
        t_expected = (a.mean - b.mean) / math.sqrt(sa + sb)
        df = (sa + sb) ** 2 / (sa**2 / (a.n - 1) + sb**2 / (b.n - 1))
        p_expected = t_two_tailed_p(t_expected, df)
        t, p = t_test(a, b, equal_var=False)
        assert t == pytest.approx(t_expected, abs=1e-12)
        assert p == pytest.approx(p_expected, abs=1e-6)

    def test_identical_samples_give_one(self):
        a = summarize(A)
        t, p = t_test(a, summarize(A), equal_var=True)
        assert t == 0.0
        assert p == 1.0

    def test_sign_follows_mean_order(self):
        a, b = summarize(A), summarize(B)
        t_ab, _ = t_test(a, b, equal_var=True)
        t_ba, _ = t_test(b, a, equal_var=True)
        assert t_ab > 0 > t_ba
        assert t_ab == pytest.approx(-t_ba, abs=1e-12)

    def test_degenerate_identical_constants(self):
        a = summarize([4.0, 4.0, 4.0])
        t, p = t_test(a, summarize([4.0, 4.0]), equal_var=True)
        assert (t, p) == (0.0, 1.0)

    def test_degenerate_distinct_constants(self):
        a = summarize([4.0, 4.0, 4.0])
        t, p = t_test(a, summarize([5.0, 5.0]), equal_var=True)
        assert p == 0.0 and t < 0


class TestCompareSamples:
    def test_similar_variances_use_pooled(self):
        a, b = summarize(A), summarize(B)
        assert f_test(a, b) >= 0.05
        assert compare_samples(a, b) == t_test(a, b, equal_var=True)

    def test_unequal_variances_use_welch(self):
        a, b = summarize(WIDE), summarize(NARROW)
        assert f_test(a, b) < 0.05
        assert compare_samples(a, b) == t_test(a, b, equal_var=False)


class TestDeltaPercent:
    def test_basic_percentage(self):
        assert delta_percent(105.0, 100.0) == pytest.approx(5.0)
        assert delta_percent(100.0, 105.0) == pytest.approx(-100.0 * 5.0 / 105.0)

    def test_zero_evolved_mean_undefined(self):
        with pytest.raises(ValueError, match="undefined"):
            delta_percent(1.0, 0.0)
