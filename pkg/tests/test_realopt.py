"""Benchmark functions and real-vector operators."""

import numpy as np
import pytest

from eea.errors import ConfigError
from eea.problems.realopt import (
    FUNCTION_IDS,
    RealDomain,
    RealFunctionProblem,
    convex_crossover,
    default_domain,
    evaluate,
    gaussian_mutation,
    known_minimum,
    random_individual,
)
from eea.rng import make_rng

ZERO5 = np.zeros(5)


class TestFunctionValues:
    @pytest.mark.parametrize("fid", ["f1", "f2", "f3", "f4", "f5", "f7", "f8", "f9"])
    def test_zero_vector_minimum(self, fid):
        assert abs(evaluate(fid, ZERO5)) < 1e-9

    def test_rosenbrock_minimum_at_ones(self):
        assert abs(evaluate("f6", np.ones(5))) < 1e-9

    def test_schwefel_minimum_near_table_value(self):
        value = evaluate("f10", np.full(5, 420.9687))
        assert abs(value - (-5 * 418.98)) < 0.5
        assert abs(value - known_minimum("f10", 5)) < 0.5

    def test_weighted_sphere_hand_value(self):
        # 1*1 + 2*4 + 3*9 + 4*16 + 5*25 = 225
        assert evaluate("f1", np.array([1.0, 2.0, 3.0, 4.0, 5.0])) == 225.0

    def test_sum_and_product_of_moduli(self):
        # |x| sum 6, |x| product 6: f3 = 12
        assert evaluate("f3", np.array([-1.0, 2.0, -3.0])) == 12.0

    def test_nested_square_sums(self):
        # partial sums of squares: 1 + (1+4) = 6
        assert evaluate("f4", np.array([1.0, 2.0])) == 6.0

    def test_max_component_as_printed(self):
        # printed form is max of signed components, not of moduli
        assert evaluate("f5", np.array([-3.0, 2.0])) == 2.0
        assert evaluate("f5", np.array([-3.0, -5.0])) == -3.0

    def test_max_component_absolute_switch(self):
        assert evaluate("f5", np.array([-3.0, 2.0]), f5_absolute=True) == 3.0
        assert evaluate("f5", np.array([-3.0, -5.0]), f5_absolute=True) == 5.0

    def test_rastrigin_hand_value(self):
        # at (0.5, 0): 10*2 + (0.25 - 10*cos(pi)) + (0 - 10) = 20.25
        assert abs(evaluate("f7", np.array([0.5, 0.0])) - 20.25) < 1e-12

    def test_unknown_id_rejected(self):
        with pytest.raises(ConfigError, match="f11"):
            evaluate("f11", ZERO5)

    @pytest.mark.parametrize("fid", ["f2", "f3", "f5", "f7", "f8", "f10"])
    def test_permutation_symmetry(self, fid):
        rng = make_rng(13)
        for _ in range(20):
            x = rng.uniform(-5, 5, 6)
            shuffled = x[rng.permutation(6)]
            assert evaluate(fid, x) == pytest.approx(evaluate(fid, shuffled), rel=1e-12)


class TestDomains:
    def test_training_function_domain(self):
        d = default_domain("f1")
        assert (d.min_x, d.max_x, d.n) == (-10.0, 10.0, 5)

    @pytest.mark.parametrize(
        "fid,lo,hi",
        [
            ("f2", -100, 100), ("f4", -100, 100), ("f5", -100, 100),
            ("f6", -30, 30), ("f7", -5, 5), ("f8", -32, 32),
            ("f9", -500, 500), ("f10", -500, 500),
        ],
    )
    def test_published_bounds(self, fid, lo, hi):
        d = default_domain(fid)
        assert (d.min_x, d.max_x) == (lo, hi)

    def test_degenerate_width_rejected(self):
        with pytest.raises(ConfigError):
            RealDomain(3.0, 3.0, 5)

    def test_bad_dimension_rejected(self):
        with pytest.raises(ConfigError):
            RealDomain(-1.0, 1.0, 0)

    def test_all_ten_functions_exist(self):
        assert FUNCTION_IDS == tuple(f"f{i}" for i in range(1, 11))


class TestOperators:
    DOMAIN = RealDomain(-10.0, 10.0, 4)

    def test_convex_crossover_is_midpoint(self):
        child = convex_crossover(np.array([0.0, 0.0]), np.array([2.0, 4.0]), make_rng(0))
        assert np.array_equal(child, np.array([1.0, 2.0]))

    def test_convex_crossover_identical_parents(self):
        x = np.array([1.0, -2.0, 3.0])
        assert np.array_equal(convex_crossover(x, x, make_rng(0)), x)

    def test_convex_crossover_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension"):
            convex_crossover(np.zeros(2), np.zeros(3), make_rng(0))

    def test_convex_crossover_within_parent_box(self):
        rng = make_rng(21)
        for _ in range(200):
            a = rng.uniform(-10, 10, 4)
            b = rng.uniform(-10, 10, 4)
            child = convex_crossover(a, b, rng)
            assert np.all(child >= np.minimum(a, b))
            assert np.all(child <= np.maximum(a, b))

    def test_gaussian_zero_sigma_is_identity(self):
        x = np.array([1.0, -2.0, 3.0, 4.0])
        out = gaussian_mutation(x, 0.0, self.DOMAIN, make_rng(5))
        assert np.array_equal(out, x)

    def test_gaussian_clamps_at_bounds(self):
        x = np.full(4, 10.0)  # already at max
        rng = make_rng(6)
        for _ in range(50):
            out = gaussian_mutation(x, 5.0, self.DOMAIN, rng)
            assert np.all(out <= 10.0) and np.all(out >= -10.0)

    def test_gaussian_negative_sigma_rejected(self):
        with pytest.raises(ConfigError):
            gaussian_mutation(np.zeros(4), -0.1, self.DOMAIN, make_rng(0))

    def test_gaussian_sample_stddev(self):
        """1e5 one-component samples at an interior point, sigma 0.01: the
        sample stddev estimate must land within 5% (chi-square bound is far
        tighter at this n)."""
        domain = RealDomain(-10.0, 10.0, 1)
        rng = make_rng(7)
        x = np.zeros(1)
        samples = np.array(
            [gaussian_mutation(x, 0.01, domain, rng)[0] for _ in range(100_000)]
        )
        assert abs(samples.std(ddof=1) - 0.01) < 0.0005

    def test_random_individual_within_bounds(self):
        rng = make_rng(8)
        for _ in range(100):
            x = random_individual(self.DOMAIN, rng)
            assert x.shape == (4,)
            assert np.all(x >= -10.0) and np.all(x <= 10.0)


class TestRealFunctionProblem:
    def test_dimension_mismatch_rejected(self):
        prob = RealFunctionProblem("f1", n=5)
        with pytest.raises(ValueError, match="dimension 5"):
            prob.evaluate(np.zeros(4))

    def test_name_and_defaults(self):
        prob = RealFunctionProblem("f3")
        assert prob.name == "f3"
        assert prob.sigma == 0.01
        assert (prob.domain.min_x, prob.domain.max_x, prob.domain.n) == (-10.0, 10.0, 5)

    def test_f5_absolute_switch_plumbed(self):
        prob = RealFunctionProblem("f5", n=2, f5_absolute=True)
        assert prob.evaluate(np.array([-3.0, 2.0])) == 3.0

    def test_operators_respect_domain(self):
        prob = RealFunctionProblem("f10")
        rng = make_rng(9)
        x = prob.random_individual(rng)
        y = prob.random_individual(rng)
        child = prob.mutate(prob.crossover(x, y, rng), rng)
        assert np.all(child >= -500.0) and np.all(child <= 500.0)
