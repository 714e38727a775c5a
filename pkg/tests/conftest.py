"""Shared fixtures and test doubles."""

from pathlib import Path

import numpy as np
import pytest

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def att48_text() -> str:
    return (DATA_DIR / "att48.tsp").read_text()


@pytest.fixture(scope="session")
def berlin52_text() -> str:
    return (DATA_DIR / "berlin52.tsp").read_text()


@pytest.fixture(scope="session")
def qap10_text() -> str:
    return (DATA_DIR / "qap10.dat").read_text()


@pytest.fixture(scope="session")
def qap3_text() -> str:
    return (DATA_DIR / "qap3.dat").read_text()


class ScriptedRng:
    """Stand-in for a numpy Generator whose draws are scripted by the test.

    integers() pops from the integer queue; random() pops from the float
    queue (array requests pop one per element); normal() pops from the
    float queue scaled by sigma.
    """

    def __init__(self, integers=(), floats=()):
        self._integers = list(integers)
        self._floats = list(floats)

    def integers(self, low, high=None, size=None):
        if size is None:
            return self._integers.pop(0)
        return np.array([self._integers.pop(0) for _ in range(int(size))])

    def random(self, size=None):
        if size is None:
            return self._floats.pop(0)
        return np.array([self._floats.pop(0) for _ in range(int(size))])

    def normal(self, loc, scale, size=None):
        count = 1 if size is None else int(size)
        out = np.array([loc + scale * self._floats.pop(0) for _ in range(count)])
        return out[0] if size is None else out


class RecordingProblem:
    """Individuals are consecutive integer ids; fitnesses come from a table
    indexed by id, and every operator call is recorded for assertions."""

    name = "recording"

    def __init__(self, fitnesses):
        self.fitnesses = list(fitnesses)
        self.next_id = 0
        self.calls = []

    def _fresh(self) -> int:
        ind = self.next_id
        self.next_id += 1
        return ind

    def random_individual(self, rng) -> int:
        self.calls.append(("init",))
        return self._fresh()

    def evaluate(self, individual) -> float:
        self.calls.append(("evaluate", individual))
        return float(self.fitnesses[individual])

    def crossover(self, a, b, rng) -> int:
        self.calls.append(("crossover", a, b))
        return self._fresh()

    def mutate(self, a, rng) -> int:
        self.calls.append(("mutate", a))
        return self._fresh()

    def count(self, kind: str) -> int:
        return sum(1 for c in self.calls if c[0] == kind)


class CountingProblem:
    """Wraps a problem and counts evaluate() calls."""

    def __init__(self, inner):
        self.inner = inner
        self.evaluations = 0

    @property
    def name(self):
        return self.inner.name

    def random_individual(self, rng):
        return self.inner.random_individual(rng)

    def evaluate(self, individual):
        self.evaluations += 1
        return self.inner.evaluate(individual)

    def crossover(self, a, b, rng):
        return self.inner.crossover(a, b, rng)

    def mutate(self, a, rng):
        return self.inner.mutate(a, rng)


@pytest.fixture
def scripted_rng_cls():
    return ScriptedRng


@pytest.fixture
def recording_problem_cls():
    return RecordingProblem


@pytest.fixture
def counting_problem_cls():
    return CountingProblem
