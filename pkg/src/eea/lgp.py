"""Macro-level search over evolutionary-algorithm programs.

An EA is encoded as a fixed-length sequence of instructions over an array of
population registers; each instruction applies one genetic operator (Select,
Crossover, Mutate). This module holds the encoding and the steady-state
linear-GP loop that searches the space of such programs. How a program is run
against a concrete problem lives in interpreter.py.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import ConfigError, EvaluationError
from .rng import make_rng, map_indexed


class Opcode(Enum):
    SELECT = "Select"
    CROSSOVER = "Crossover"
    MUTATE = "Mutate"


@dataclass(frozen=True, eq=False)
class Instruction:
    """One register-level genetic-operator application.

    src2 is carried for every opcode but unused by MUTATE; equality and hash
    ignore it there, so programs that execute identically compare equal.
    """

    op: Opcode
    dest: int
    src1: int
    src2: int

    def _key(self):
        src2 = self.src1 if self.op is Opcode.MUTATE else self.src2
        return (self.op, self.dest, self.src1, src2)

    def __eq__(self, other):
        if not isinstance(other, Instruction):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())


@dataclass(frozen=True)
class EAProgram:
    """A fixed-length EA body plus the register count and loop bound it runs with."""

    instructions: tuple[Instruction, ...]
    num_registers: int
    micro_generations: int

    def __post_init__(self):
        if self.num_registers < 2:
            raise ConfigError(f"num_registers must be >= 2, got {self.num_registers}")
        if self.micro_generations < 0:
            raise ConfigError(f"micro_generations must be >= 0, got {self.micro_generations}")
        if not self.instructions:
            raise ConfigError("program must contain at least one instruction")
        for pos, inst in enumerate(self.instructions):
            for name in ("dest", "src1", "src2"):
                idx = getattr(inst, name)
                if not 0 <= idx < self.num_registers:
                    raise ConfigError(
                        f"instruction {pos}: {name} index {idx} outside "
                        f"[0, {self.num_registers})"
                    )

    def __len__(self):
        return len(self.instructions)


@dataclass(frozen=True)
class MacroConfig:
    """Parameters of the steady-state search over programs."""

    pop_size: int = 500
    code_length: int = 80
    generations: int = 100
    crossover_prob: float = 0.7
    mutations_per_chromosome: int = 5
    seed: int = 0

    def __post_init__(self):
        if self.pop_size < 2:
            raise ConfigError(f"pop_size must be >= 2, got {self.pop_size}")
        if self.code_length < 1:
            raise ConfigError(f"code_length must be >= 1, got {self.code_length}")
        if self.generations < 0:
            raise ConfigError(f"generations must be >= 0, got {self.generations}")
        if not 0.0 <= self.crossover_prob <= 1.0:
            raise ConfigError(f"crossover_prob must be in [0, 1], got {self.crossover_prob}")
        if not 0 <= self.mutations_per_chromosome <= self.code_length:
            raise ConfigError(
                f"mutations_per_chromosome must be in [0, {self.code_length}], "
                f"got {self.mutations_per_chromosome}"
            )


_OPCODES = (Opcode.SELECT, Opcode.CROSSOVER, Opcode.MUTATE)


def random_instruction(num_registers: int, rng: np.random.Generator) -> Instruction:
    """Uniform opcode, each operand index uniform over [0, num_registers)."""
    if num_registers < 2:
        raise ConfigError(f"num_registers must be >= 2, got {num_registers}")
    op = _OPCODES[int(rng.integers(3))]
    dest, src1, src2 = (int(i) for i in rng.integers(num_registers, size=3))
    return Instruction(op, dest, src1, src2)


def random_program(
    code_length: int,
    num_registers: int,
    micro_generations: int,
    rng: np.random.Generator,
) -> EAProgram:
    instructions = tuple(random_instruction(num_registers, rng) for _ in range(code_length))
    return EAProgram(instructions, num_registers, micro_generations)


def uniform_crossover(
    a: EAProgram, b: EAProgram, rng: np.random.Generator
) -> tuple[EAProgram, EAProgram]:
    """Swap instructions position-wise with probability 1/2; two offspring."""
    if (len(a), a.num_registers, a.micro_generations) != (
        len(b),
        b.num_registers,
        b.micro_generations,
    ):
        raise ValueError("parents have incompatible length, register count or loop bound")
    swap = rng.random(len(a)) < 0.5
    c1 = tuple(y if s else x for x, y, s in zip(a.instructions, b.instructions, swap))
    c2 = tuple(x if s else y for x, y, s in zip(a.instructions, b.instructions, swap))
    return (
        EAProgram(c1, a.num_registers, a.micro_generations),
        EAProgram(c2, a.num_registers, a.micro_generations),
    )


def mutate_program(program: EAProgram, count: int, rng: np.random.Generator) -> EAProgram:
    """Replace count distinct positions with fresh random instructions."""
    if not 0 <= count <= len(program):
        raise ConfigError(f"mutation count must be in [0, {len(program)}], got {count}")
    positions = rng.choice(len(program), size=count, replace=False)
    body = list(program.instructions)
    for pos in positions:
        body[int(pos)] = random_instruction(program.num_registers, rng)
    return EAProgram(tuple(body), program.num_registers, program.micro_generations)


def binary_tournament(fitnesses: Sequence[float], rng: np.random.Generator) -> int:
    """Index of the better (lower-fitness) of two uniform draws; ties and
    self-matches go to the first draw."""
    if len(fitnesses) < 2:
        raise ConfigError(f"tournament needs a population of >= 2, got {len(fitnesses)}")
    i = int(rng.integers(len(fitnesses)))
    j = int(rng.integers(len(fitnesses)))
    return i if fitnesses[i] <= fitnesses[j] else j


@dataclass(frozen=True)
class SearchResult:
    best_program: EAProgram
    best_fitness: float
    # history[g] = best fitness in the population after g replacement attempts
    history: list[float] = field(repr=False)


def steady_state_search(
    config: MacroConfig,
    num_registers: int,
    micro_generations: int,
    fitness_fn: Callable[[EAProgram], float],
    workers: int = 1,
    on_progress: Callable[[int, float], None] | None = None,
) -> SearchResult:
    """Steady-state search: each replacement attempt mates two tournament
    winners, mutates both offspring, and lets the better one replace the
    population's worst program only on strict improvement.

    Lower fitness is better throughout. history has length generations + 1,
    entry 0 being the initial population's best, and is non-increasing.
    """
    rng = make_rng(config.seed)
    population = [
        random_program(config.code_length, num_registers, micro_generations, rng)
        for _ in range(config.pop_size)
    ]
    fitnesses = map_indexed(_guarded(fitness_fn), population, workers)

    best_idx = min(range(len(fitnesses)), key=fitnesses.__getitem__)
    best_program, best_fitness = population[best_idx], fitnesses[best_idx]
    history = [best_fitness]

    for attempt in range(config.generations):
        i = binary_tournament(fitnesses, rng)
        j = binary_tournament(fitnesses, rng)
        if rng.random() < config.crossover_prob:
            c1, c2 = uniform_crossover(population[i], population[j], rng)
        else:
            c1, c2 = population[i], population[j]
        c1 = mutate_program(c1, config.mutations_per_chromosome, rng)
        c2 = mutate_program(c2, config.mutations_per_chromosome, rng)
        f1, f2 = map_indexed(_guarded(fitness_fn), [c1, c2], workers)
        child, child_fit = (c1, f1) if f1 <= f2 else (c2, f2)

        worst = max(range(len(fitnesses)), key=fitnesses.__getitem__)
        if child_fit < fitnesses[worst]:
            population[worst] = child
            fitnesses[worst] = child_fit
        if child_fit < best_fitness:
            best_program, best_fitness = child, child_fit
        history.append(min(fitnesses))
        if on_progress is not None:
            on_progress(attempt + 1, history[-1])

    return SearchResult(best_program, best_fitness, history)


def _guarded(fitness_fn: Callable[[EAProgram], float]) -> Callable[[EAProgram], float]:
    def run(program: EAProgram) -> float:
        try:
            return fitness_fn(program)
        except Exception as exc:
            raise EvaluationError(f"fitness evaluation failed: {exc}", program) from exc

    return run
