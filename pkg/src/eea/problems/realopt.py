"""Real-valued benchmark functions f1..f10 with box domains, plus the
variation operators used on real vectors: convex (midpoint) crossover and
clamped Gaussian mutation. All functions are minimized.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ConfigError


@dataclass(frozen=True)
class RealDomain:
    """Box [min_x, max_x]^n."""

    min_x: float
    max_x: float
    n: int

    def __post_init__(self):
        if not self.min_x < self.max_x:
            raise ConfigError(f"domain needs min_x < max_x, got [{self.min_x}, {self.max_x}]")
        if self.n < 1:
            raise ConfigError(f"dimension must be >= 1, got {self.n}")


# 1..n index vectors, cached because f1/f9 sit inside the interpreter's
# innermost evaluation loop
_INDEX_CACHE: dict[int, np.ndarray] = {}


def _indices(n):
    w = _INDEX_CACHE.get(n)
    if w is None:
        w = _INDEX_CACHE[n] = np.arange(1, n + 1, dtype=float)
    return w


def f1(x):
    return float((_indices(x.size) * x * x).sum())


def f2(x):
    return float(np.sum(x * x))


def f3(x):
    return float(np.sum(np.abs(x)) + np.prod(np.abs(x)))


def f4(x):
    # sum over i of (sum of x_j^2 for j <= i), i.e. a weighted square sum
    return float(np.sum(np.cumsum(x * x)))


def f5(x):
    return float(np.max(x))


def f5_abs(x):
    return float(np.max(np.abs(x)))


def f6(x):
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (1.0 - x[:-1]) ** 2))


def f7(x):
    return float(10.0 * x.size + np.sum(x * x - 10.0 * np.cos(2.0 * np.pi * x)))


def f8(x):
    a, b, c = 20.0, 0.2, 2.0 * np.pi
    s1 = np.sum(x * x) / x.size
    s2 = np.sum(np.cos(c * x)) / x.size
    return float(-a * np.exp(-b * np.sqrt(s1)) - np.exp(s2) + a + np.e)


def f9(x):
    i = _indices(x.size)
    return float((x * x).sum() / 4000.0 - np.prod(np.cos(x / np.sqrt(i))) + 1.0)


def f10(x):
    return float(np.sum(-x * np.sin(np.sqrt(np.abs(x)))))


_FUNCTIONS = {
    "f1": f1, "f2": f2, "f3": f3, "f4": f4, "f5": f5,
    "f6": f6, "f7": f7, "f8": f8, "f9": f9, "f10": f10,
}

# per-function box bounds
_BOUNDS = {
    "f1": (-10.0, 10.0),
    "f2": (-100.0, 100.0),
    "f3": (-10.0, 10.0),
    "f4": (-100.0, 100.0),
    "f5": (-100.0, 100.0),
    "f6": (-30.0, 30.0),
    "f7": (-5.0, 5.0),
    "f8": (-32.0, 32.0),
    "f9": (-500.0, 500.0),
    "f10": (-500.0, 500.0),
}

FUNCTION_IDS = tuple(_FUNCTIONS)


def default_domain(function_id: str, n: int = 5) -> RealDomain:
    lo, hi = _BOUNDS[_check_id(function_id)]
    return RealDomain(lo, hi, n)


def known_minimum(function_id: str, n: int) -> float:
    """Global minimum value on the default domain (f10's depends on n)."""
    if _check_id(function_id) == "f10":
        return -n * 418.98
    return 0.0


def _check_id(function_id: str) -> str:
    if function_id not in _FUNCTIONS:
        raise ConfigError(f"unknown function id {function_id!r}, expected one of {FUNCTION_IDS}")
    return function_id


def evaluate(function_id: str, x: np.ndarray, f5_absolute: bool = False) -> float:
    fn = _FUNCTIONS[_check_id(function_id)]
    if function_id == "f5" and f5_absolute:
        fn = f5_abs
    return fn(np.asarray(x, dtype=float))


def random_individual(domain: RealDomain, rng: np.random.Generator) -> np.ndarray:
    return rng.uniform(domain.min_x, domain.max_x, domain.n)


def convex_crossover(a: np.ndarray, b: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Component-wise midpoint of the parents."""
    if a.shape != b.shape:
        raise ValueError(f"parents have mismatched dimensions {a.shape} and {b.shape}")
    return (a + b) / 2.0


def gaussian_mutation(
    x: np.ndarray, sigma: float, domain: RealDomain, rng: np.random.Generator
) -> np.ndarray:
    """Add N(0, sigma) noise per component, clamped back into the box."""
    if sigma < 0:
        raise ConfigError(f"sigma must be >= 0, got {sigma}")
    return (x + rng.normal(0.0, sigma, np.size(x))).clip(domain.min_x, domain.max_x)


class RealFunctionProblem:
    """One benchmark function as a pluggable problem."""

    def __init__(
        self,
        function_id: str,
        n: int = 5,
        sigma: float = 0.01,
        f5_absolute: bool = False,
        domain: RealDomain | None = None,
    ):
        self.function_id = _check_id(function_id)
        self.domain = domain if domain is not None else default_domain(function_id, n)
        if sigma < 0:
            raise ConfigError(f"sigma must be >= 0, got {sigma}")
        self.sigma = sigma
        self.f5_absolute = f5_absolute
        # resolved once; evaluate() is the hot path
        self._fn = f5_abs if (self.function_id == "f5" and f5_absolute) else _FUNCTIONS[self.function_id]

    @property
    def name(self) -> str:
        return self.function_id

    def random_individual(self, rng: np.random.Generator) -> np.ndarray:
        return random_individual(self.domain, rng)

    def evaluate(self, x: np.ndarray) -> float:
        x = np.asarray(x, dtype=float)
        if x.size != self.domain.n:
            raise ValueError(
                f"{self.function_id} expects dimension {self.domain.n}, got {x.size}"
            )
        return self._fn(x)

    def crossover(self, a, b, rng: np.random.Generator):
        return convex_crossover(a, b, rng)

    def mutate(self, x, rng: np.random.Generator):
        return gaussian_mutation(x, self.sigma, self.domain, rng)
