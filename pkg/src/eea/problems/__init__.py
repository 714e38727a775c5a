"""Pluggable problem definitions.

A problem exposes name, random_individual(rng), evaluate(individual),
crossover(a, b, rng) and mutate(individual, rng); lower evaluate() is better.
"""

from __future__ import annotations

from typing import Protocol, runtime_checkable

import numpy as np

from ..errors import ConfigError
from .qap import QapInstance, QapProblem, parse_qaplib
from .realopt import FUNCTION_IDS, RealFunctionProblem
from .tsp import TspInstance, TspProblem, parse_tsplib


@runtime_checkable
class Problem(Protocol):
    @property
    def name(self) -> str: ...

    def random_individual(self, rng: np.random.Generator): ...

    def evaluate(self, individual) -> float: ...

    def crossover(self, a, b, rng: np.random.Generator): ...

    def mutate(self, individual, rng: np.random.Generator): ...


def build_problem(
    kind: str,
    *,
    function: str = "",
    dimension: int = 5,
    sigma: float = 0.01,
    f5_absolute: bool = False,
    text: str = "",
    name: str = "",
) -> Problem:
    """Construct a problem from plain values (config file or API request)."""
    if kind == "function":
        return RealFunctionProblem(function, dimension, sigma, f5_absolute)
    if kind == "tsp":
        instance = parse_tsplib(text)
        if name:
            instance = TspInstance(
                name, instance.n, instance.coords, instance.edge_weight_type, instance.dist
            )
        return TspProblem(instance)
    if kind == "qap":
        return QapProblem(parse_qaplib(text, name))
    raise ConfigError(f"unknown problem kind {kind!r}, expected function, tsp or qap")


__all__ = [
    "Problem",
    "build_problem",
    "RealFunctionProblem",
    "FUNCTION_IDS",
    "TspInstance",
    "TspProblem",
    "parse_tsplib",
    "QapInstance",
    "QapProblem",
    "parse_qaplib",
]
