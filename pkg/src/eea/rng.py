"""Seed derivation and deterministic parallel mapping.

Every stochastic component takes a numpy Generator. Independent streams are
derived from a master seed plus integer path components, so results do not
depend on call order across workers or on the worker count.
"""

from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

import numpy as np

T = TypeVar("T")
U = TypeVar("U")


def make_rng(*path: int) -> np.random.Generator:
    """Generator for the stream identified by (master_seed, *indices)."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(list(path))))


def map_indexed(fn: Callable[[T], U], items: Sequence[T], workers: int = 1) -> list[U]:
    """Map fn over items, results in input order regardless of worker count."""
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if workers == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
