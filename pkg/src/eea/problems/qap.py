"""Quadratic assignment: QAPLIB parsing, permutation cost, swap mutation and
a crossover keeping facility placements the parents agree on. Assignments map
position i to facility perm[i].
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import ConfigError, ParseError


@dataclass(frozen=True)
class QapInstance:
    name: str
    n: int
    a: np.ndarray = field(repr=False, compare=False)  # flows
    b: np.ndarray = field(repr=False, compare=False)  # distances

    @classmethod
    def from_matrices(cls, name, a, b):
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ConfigError(f"flow matrix must be square, got shape {a.shape}")
        if a.shape != b.shape:
            raise ConfigError(f"matrix shapes differ: {a.shape} vs {b.shape}")
        if a.shape[0] < 2:
            raise ConfigError(f"instance needs n >= 2, got {a.shape[0]}")
        a.setflags(write=False)
        b.setflags(write=False)
        return cls(name, a.shape[0], a, b)


def parse_qaplib(text: str, name: str = "") -> QapInstance:
    """Parse QAPLIB format: n followed by two n x n matrices, whitespace
    separated with arbitrary line breaks."""
    tokens = text.split()
    if not tokens:
        raise ParseError("empty QAPLIB document")
    try:
        values = [float(t) for t in tokens]
    except ValueError:
        bad = next(t for t in tokens if not _is_number(t))
        raise ParseError(f"non-numeric token {bad!r}") from None
    n = int(values[0])
    if n != values[0] or n < 2:
        raise ParseError(f"size must be an integer >= 2, got {tokens[0]!r}")
    expected = 1 + 2 * n * n
    if len(values) != expected:
        raise ParseError(
            f"expected {expected} numbers for n={n} (size plus two {n}x{n} "
            f"matrices), got {len(values)}"
        )
    a = np.array(values[1 : 1 + n * n]).reshape(n, n)
    b = np.array(values[1 + n * n :]).reshape(n, n)
    return QapInstance.from_matrices(name, a, b)


def _is_number(token: str) -> bool:
    try:
        float(token)
        return True
    except ValueError:
        return False


def _check_assignment(perm, n: int) -> list[int]:
    perm = [int(p) for p in perm]
    if len(perm) != n or set(perm) != set(range(n)):
        raise ValueError(f"assignment is not a permutation of 0..{n - 1}")
    return perm


def qap_cost(instance: QapInstance, perm) -> float:
    """Sum over position pairs (i, j) of flow a[i, j] times distance between
    the facilities assigned there, b[perm[i], perm[j]]."""
    p = np.asarray(_check_assignment(perm, instance.n))
    return float((instance.a * instance.b[np.ix_(p, p)]).sum())


def random_assignment(n: int, rng: np.random.Generator) -> list[int]:
    if n < 2:
        raise ConfigError(f"instance needs n >= 2, got {n}")
    return [int(p) for p in rng.permutation(n)]


def swap_mutation(perm, rng: np.random.Generator) -> list[int]:
    """Swap the facilities at two distinct uniform positions."""
    perm = [int(p) for p in perm]
    n = len(perm)
    if n < 2:
        raise ConfigError(f"swap needs n >= 2, got {n}")
    i = int(rng.integers(n))
    j = int(rng.integers(n))
    while j == i:
        j = int(rng.integers(n))
    perm[i], perm[j] = perm[j], perm[i]
    return perm


def qap_dpx_crossover(p1, p2, rng: np.random.Generator) -> list[int]:
    """Keep positions where both parents place the same facility; fill the
    rest with a uniform random assignment of the leftover facilities."""
    n = len(p1)
    t1 = _check_assignment(p1, n)
    t2 = _check_assignment(p2, n)
    child = [f1 if f1 == f2 else None for f1, f2 in zip(t1, t2)]
    placed = {f for f in child if f is not None}
    open_positions = [i for i, f in enumerate(child) if f is None]
    leftover = [f for f in range(n) if f not in placed]
    shuffled = [leftover[int(k)] for k in rng.permutation(len(leftover))]
    for pos, fac in zip(open_positions, shuffled):
        child[pos] = fac
    return [int(f) for f in child]


class QapProblem:
    """A QAPLIB instance as a pluggable problem; individuals are assignments."""

    def __init__(self, instance: QapInstance):
        self.instance = instance

    @property
    def name(self) -> str:
        return self.instance.name or f"qap{self.instance.n}"

    def random_individual(self, rng: np.random.Generator) -> list[int]:
        return random_assignment(self.instance.n, rng)

    def evaluate(self, perm) -> float:
        return qap_cost(self.instance, perm)

    def crossover(self, a, b, rng: np.random.Generator) -> list[int]:
        return qap_dpx_crossover(a, b, rng)

    def mutate(self, perm, rng: np.random.Generator) -> list[int]:
        return swap_mutation(perm, rng)
