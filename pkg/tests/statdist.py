"""Independent t and F distribution tail areas for cross-checking.

Deliberately avoids scipy: densities are written out via log-gamma and
integrated with adaptive Simpson quadrature, so the production p-values are
checked against a second, unrelated route.
"""

import math


def _adaptive_simpson(f, a, b, tol=1e-12, depth=60):
    def simpson(lo, hi):
        mid = (lo + hi) / 2.0
        return (hi - lo) / 6.0 * (f(lo) + 4.0 * f(mid) + f(hi)), mid

    def recurse(lo, hi, whole, mid, eps, d):
        left, lmid = simpson(lo, mid)
        right, rmid = simpson(mid, hi)
        if d <= 0 or abs(left + right - whole) <= 15.0 * eps:
            return left + right + (left + right - whole) / 15.0
        return recurse(lo, mid, left, lmid, eps / 2.0, d - 1) + recurse(
            mid, hi, right, rmid, eps / 2.0, d - 1
        )

    whole, mid = simpson(a, b)
    return recurse(a, b, whole, mid, tol, depth)


def _lbeta(a, b):
    return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)


def t_density(x, df):
    log_pdf = (
        math.lgamma((df + 1.0) / 2.0)
        - math.lgamma(df / 2.0)
        - 0.5 * math.log(df * math.pi)
        - (df + 1.0) / 2.0 * math.log1p(x * x / df)
    )
    return math.exp(log_pdf)


def t_two_tailed_p(t, df):
    """P(|T| >= |t|) for T ~ t(df)."""
    t = abs(float(t))
    if t == 0.0:
        return 1.0
    central = _adaptive_simpson(lambda x: t_density(x, df), 0.0, t)
    return max(0.0, min(1.0, 2.0 * (0.5 - central)))


def f_density(x, d1, d2):
    if x <= 0.0:
        return 0.0
    log_pdf = (
        (d1 / 2.0) * math.log(d1)
        + (d2 / 2.0) * math.log(d2)
        + (d1 / 2.0 - 1.0) * math.log(x)
        - ((d1 + d2) / 2.0) * math.log(d2 + d1 * x)
        - _lbeta(d1 / 2.0, d2 / 2.0)
    )
    return math.exp(log_pdf)


def f_upper_tail(x, d1, d2):
    """P(F >= x) for F ~ F(d1, d2)."""
    if x <= 0.0:
        return 1.0
    cdf = _adaptive_simpson(lambda u: f_density(u, d1, d2), 0.0, x)
    return max(0.0, min(1.0, 1.0 - cdf))
