"""Symmetric TSP: TSPLIB parsing (EUC_2D and ATT rounding), tour length,
nearest-neighbor construction, distance-preserving crossover and the
2-exchange move. Tours are permutations of 0..n-1 read as cyclic visit order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import ConfigError, ParseError


def euc_2d(x1: float, y1: float, x2: float, y2: float) -> int:
    """TSPLIB EUC_2D: Euclidean distance rounded to nearest integer."""
    return int(math.sqrt((x1 - x2) ** 2 + (y1 - y2) ** 2) + 0.5)


def att(x1: float, y1: float, x2: float, y2: float) -> int:
    """TSPLIB ATT pseudo-Euclidean distance (rounded up when the rounding
    fell short of the true value)."""
    r = math.sqrt(((x1 - x2) ** 2 + (y1 - y2) ** 2) / 10.0)
    t = int(r + 0.5)
    return t + 1 if t < r else t


_EDGE_TYPES = {"EUC_2D": euc_2d, "ATT": att}


@dataclass(frozen=True)
class TspInstance:
    name: str
    n: int
    coords: tuple[tuple[float, float], ...]
    edge_weight_type: str
    dist: np.ndarray = field(repr=False, compare=False)

    @classmethod
    def from_coords(cls, name, coords, edge_weight_type):
        if edge_weight_type not in _EDGE_TYPES:
            raise ConfigError(f"unsupported EDGE_WEIGHT_TYPE {edge_weight_type!r}")
        if len(coords) < 3:
            raise ConfigError(f"instance needs >= 3 cities, got {len(coords)}")
        metric = _EDGE_TYPES[edge_weight_type]
        n = len(coords)
        dist = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(i + 1, n):
                d = metric(*coords[i], *coords[j])
                dist[i, j] = dist[j, i] = d
        dist.setflags(write=False)
        return cls(name, n, tuple(coords), edge_weight_type, dist)


def distance(instance: TspInstance, i: int, j: int) -> int:
    if not (0 <= i < instance.n and 0 <= j < instance.n):
        raise IndexError(f"city index out of range for n={instance.n}: ({i}, {j})")
    return int(instance.dist[i, j])


def parse_tsplib(text: str) -> TspInstance:
    """Parse the TSPLIB subset: NAME, DIMENSION, EDGE_WEIGHT_TYPE
    (EUC_2D or ATT) and a NODE_COORD_SECTION, EOF optional."""
    name = ""
    dimension = None
    edge_type = None
    coords: dict[int, tuple[float, float]] = {}
    lines = text.splitlines()
    i = 0
    while i < len(lines):
        lineno, line = i + 1, lines[i].strip()
        i += 1
        if not line or line == "EOF":
            continue
        if line == "NODE_COORD_SECTION":
            if dimension is None:
                raise ParseError("NODE_COORD_SECTION before DIMENSION", lineno)
            for _ in range(dimension):
                if i >= len(lines):
                    raise ParseError(
                        f"expected {dimension} coordinate lines, file ended after "
                        f"{len(coords)}",
                        len(lines),
                    )
                lineno, row = i + 1, lines[i].strip()
                i += 1
                parts = row.split()
                if len(parts) != 3:
                    raise ParseError(f"expected 'index x y', got {row!r}", lineno)
                try:
                    idx, x, y = int(parts[0]), float(parts[1]), float(parts[2])
                except ValueError:
                    raise ParseError(f"non-numeric coordinate line {row!r}", lineno) from None
                if not 1 <= idx <= dimension:
                    raise ParseError(f"city index {idx} outside 1..{dimension}", lineno)
                if idx in coords:
                    raise ParseError(f"duplicate city index {idx}", lineno)
                coords[idx] = (x, y)
            continue
        key, _, value = line.partition(":")
        key, value = key.strip(), value.strip()
        if key == "NAME":
            name = value
        elif key == "DIMENSION":
            try:
                dimension = int(value)
            except ValueError:
                raise ParseError(f"DIMENSION must be an integer, got {value!r}", lineno) from None
        elif key == "EDGE_WEIGHT_TYPE":
            if value not in _EDGE_TYPES:
                raise ParseError(
                    f"unsupported EDGE_WEIGHT_TYPE {value!r}, expected EUC_2D or ATT", lineno
                )
            edge_type = value
        # other header keys (TYPE, COMMENT, ...) are ignored
    if dimension is None:
        raise ParseError("missing DIMENSION")
    if edge_type is None:
        raise ParseError("missing EDGE_WEIGHT_TYPE")
    if len(coords) != dimension:
        raise ParseError(f"expected {dimension} cities, got {len(coords)}")
    ordered = tuple(coords[k] for k in range(1, dimension + 1))
    return TspInstance.from_coords(name, ordered, edge_type)


def _check_tour(tour, n: int) -> list[int]:
    tour = [int(c) for c in tour]
    if len(tour) != n or set(tour) != set(range(n)):
        raise ValueError(f"tour is not a permutation of 0..{n - 1}")
    return tour


def tour_length(instance: TspInstance, tour) -> int:
    """Cycle length including the closing edge."""
    arr = np.asarray(_check_tour(tour, instance.n))
    return int(instance.dist[arr, np.roll(arr, -1)].sum())


def nearest_neighbor_tour(instance: TspInstance, start: int) -> list[int]:
    """Greedy tour from start, lowest city index breaking distance ties."""
    if not 0 <= start < instance.n:
        raise IndexError(f"start city {start} out of range for n={instance.n}")
    dist = instance.dist.astype(float)
    tour = [start]
    remaining = np.ones(instance.n, dtype=bool)
    remaining[start] = False
    current = start
    for _ in range(instance.n - 1):
        row = np.where(remaining, dist[current], np.inf)
        current = int(np.argmin(row))
        tour.append(current)
        remaining[current] = False
    return tour


def _edges(tour) -> set[tuple[int, int]]:
    n = len(tour)
    out = set()
    for i in range(n):
        a, b = tour[i], tour[(i + 1) % n]
        out.add((a, b) if a < b else (b, a))
    return out


def dpx_crossover(p1, p2, instance: TspInstance, rng: np.random.Generator) -> list[int]:
    """Distance-preserving crossover: keep every edge shared by both parents,
    break the first parent at all other edges, and greedily reconnect the
    resulting fragments, preferring edges absent from either parent.

    The child always contains all common edges; new connections pick the
    nearest available fragment endpoint (lowest city index on distance ties)
    and fall back to parent edges only when no new edge exists.
    """
    t1 = _check_tour(p1, instance.n)
    t2 = _check_tour(p2, instance.n)
    e1, e2 = _edges(t1), _edges(t2)
    common = e1 & e2
    if len(common) == instance.n:
        return list(t1)
    parent_edges = e1 | e2

    def is_common(a, b):
        return ((a, b) if a < b else (b, a)) in common

    # rotate t1 so it starts just after a broken edge, then split at every
    # remaining broken edge; fragment-internal edges are exactly the common ones
    n = instance.n
    cut = next(i for i in range(n) if not is_common(t1[i], t1[(i + 1) % n]))
    order = t1[cut + 1 :] + t1[: cut + 1]
    fragments: list[list[int]] = [[order[0]]]
    for k in range(1, n):
        if is_common(order[k - 1], order[k]):
            fragments[-1].append(order[k])
        else:
            fragments.append([order[k]])

    start = int(rng.integers(len(fragments)))
    first = fragments.pop(start)
    if rng.random() < 0.5:
        first.reverse()
    path = first
    while fragments:
        tail = path[-1]
        best = None  # (used parent edge, distance, endpoint city, fragment idx, reversed)
        for fi, frag in enumerate(fragments):
            for endpoint, rev in ((frag[0], False), (frag[-1], True)):
                key = (
                    (tail, endpoint) if tail < endpoint else (endpoint, tail)
                ) in parent_edges
                cand = (key, int(instance.dist[tail, endpoint]), endpoint, fi, rev)
                if best is None or cand[:3] < best[:3]:
                    best = cand
        _, _, _, fi, rev = best
        frag = fragments.pop(fi)
        if rev:
            frag.reverse()
        path.extend(frag)
    return path


def two_exchange(tour, rng: np.random.Generator) -> list[int]:
    """Remove two non-adjacent edges (chosen uniformly) and reverse the
    segment between them; exactly those two edges change."""
    tour = [int(c) for c in tour]
    n = len(tour)
    if n < 4:
        raise ConfigError(f"2-exchange needs >= 4 cities, got {n}")
    while True:
        a = int(rng.integers(n))
        b = int(rng.integers(n))
        i, j = (a, b) if a <= b else (b, a)
        if j - i >= 2 and not (i == 0 and j == n - 1):
            break
    return tour[: i + 1] + tour[i + 1 : j + 1][::-1] + tour[j + 1 :]


class TspProblem:
    """A TSPLIB instance as a pluggable problem; individuals are tours,
    initialized by nearest neighbor from a random start city."""

    def __init__(self, instance: TspInstance):
        self.instance = instance

    @property
    def name(self) -> str:
        return self.instance.name or f"tsp{self.instance.n}"

    def random_individual(self, rng: np.random.Generator) -> list[int]:
        return nearest_neighbor_tour(self.instance, int(rng.integers(self.instance.n)))

    def evaluate(self, tour) -> float:
        return float(tour_length(self.instance, tour))

    def crossover(self, a, b, rng: np.random.Generator) -> list[int]:
        return dpx_crossover(a, b, self.instance, rng)

    def mutate(self, tour, rng: np.random.Generator) -> list[int]:
        return two_exchange(tour, rng)
