"""Two-sample summary statistics for benchmark comparisons.

The variance check (two-tailed F-test) decides between the pooled-variance
and the Welch t-test; the reported improvement is the baseline mean relative
to the evolved mean in percent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import stats as _scipy_stats


@dataclass(frozen=True)
class SampleStats:
    n: int
    mean: float
    stddev: float  # sample standard deviation (n - 1 denominator)


def summarize(samples) -> SampleStats:
    xs = [float(x) for x in samples]
    if len(xs) < 2:
        raise ValueError(f"need at least 2 samples, got {len(xs)}")
    mean = math.fsum(xs) / len(xs)
    var = math.fsum((x - mean) ** 2 for x in xs) / (len(xs) - 1)
    return SampleStats(len(xs), mean, math.sqrt(var))


def f_test(a: SampleStats, b: SampleStats) -> float:
    """Two-tailed p-value for equal variances; the larger sample variance
    goes in the numerator. Equal variances (including both zero) give p = 1."""
    va, vb = a.stddev**2, b.stddev**2
    if va < vb:
        (va, na), (vb, nb) = (vb, b.n), (va, a.n)
    else:
        na, nb = a.n, b.n
    if vb == 0.0:
        return 1.0 if va == 0.0 else 0.0
    ratio = va / vb
    p = 2.0 * _scipy_stats.f.sf(ratio, na - 1, nb - 1)
    return min(p, 1.0)


def t_test(a: SampleStats, b: SampleStats, equal_var: bool) -> tuple[float, float]:
    """Two-sample t statistic and two-tailed p-value for equal means; pooled
    variance when equal_var, otherwise Welch with Welch-Satterthwaite df.
    Identical degenerate samples (both variances zero, equal means) give
    t = 0, p = 1."""
    va, vb = a.stddev**2, b.stddev**2
    if va == 0.0 and vb == 0.0:
        if a.mean == b.mean:
            return 0.0, 1.0
        return math.copysign(math.inf, a.mean - b.mean), 0.0
    if equal_var:
        df = a.n + b.n - 2
        pooled = ((a.n - 1) * va + (b.n - 1) * vb) / df
        se = math.sqrt(pooled * (1.0 / a.n + 1.0 / b.n))
    else:
        sa, sb = va / a.n, vb / b.n
        se = math.sqrt(sa + sb)
        df = (sa + sb) ** 2 / (sa**2 / (a.n - 1) + sb**2 / (b.n - 1))
    t = (a.mean - b.mean) / se
    p = 2.0 * _scipy_stats.t.sf(abs(t), df)
    return t, min(p, 1.0)


def compare_samples(a: SampleStats, b: SampleStats, alpha: float = 0.05) -> tuple[float, float]:
    """F-test-gated t-test: pooled when the F-test cannot reject equal
    variances at alpha, Welch otherwise. Returns (t, p)."""
    return t_test(a, b, equal_var=f_test(a, b) >= alpha)


def delta_percent(baseline_mean: float, evolved_mean: float) -> float:
    """Improvement of evolved over baseline as a percentage of the evolved
    mean: (baseline - evolved) / evolved * 100."""
    if evolved_mean == 0.0:
        raise ValueError("delta undefined: evolved mean is zero")
    return (baseline_mean - evolved_mean) / evolved_mean * 100.0
