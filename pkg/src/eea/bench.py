"""Benchmark harness: a standard generational GA baseline and the
budget-matched comparison between an evolved EA program and that baseline.

Budget matching sets the GA population size to the program's per-sweep
evaluation cost, so both algorithms spend the same number of problem
evaluations per generation and in total (initialization included).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, EvaluationError
from .interpreter import MicroConfig, evals_per_generation, execute_run
from .lgp import EAProgram, binary_tournament
from .problems import Problem
from .rng import make_rng, map_indexed
from .stats import SampleStats, delta_percent, summarize


@dataclass(frozen=True)
class GaConfig:
    pop_size: int
    generations: int
    crossover_prob: float = 1.0
    mutation_prob: float = 1.0

    def __post_init__(self):
        if self.pop_size < 2:
            raise ConfigError(f"pop_size must be >= 2, got {self.pop_size}")
        if self.generations < 0:
            raise ConfigError(f"generations must be >= 0, got {self.generations}")
        for name in ("crossover_prob", "mutation_prob"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ConfigError(f"{name} must be in [0, 1], got {p}")


def standard_ga_run(problem: Problem, config: GaConfig, rng: np.random.Generator) -> float:
    """One run of a generational (non-elitist) GA; each offspring comes from
    two binary tournaments, crossover with crossover_prob (else a copy of the
    first parent), mutation with mutation_prob, one evaluation. Returns the
    best fitness seen across all generations, initial population included."""
    population = [problem.random_individual(rng) for _ in range(config.pop_size)]
    fitnesses = [problem.evaluate(ind) for ind in population]
    best = min(fitnesses)
    for _ in range(config.generations):
        next_population = []
        next_fitnesses = []
        for _ in range(config.pop_size):
            i = binary_tournament(fitnesses, rng)
            j = binary_tournament(fitnesses, rng)
            if rng.random() < config.crossover_prob:
                child = problem.crossover(population[i], population[j], rng)
            else:
                child = population[i]
            if rng.random() < config.mutation_prob:
                child = problem.mutate(child, rng)
            fit = problem.evaluate(child)
            next_population.append(child)
            next_fitnesses.append(fit)
            if fit < best:
                best = fit
        population, fitnesses = next_population, next_fitnesses
    return best


def matched_ga_config(program: EAProgram) -> GaConfig:
    """GA whose per-generation and total budgets match the program's."""
    pop = evals_per_generation(program)
    if pop < 2:
        raise ConfigError(
            f"program costs {pop} evaluation(s) per sweep; budget matching "
            "needs at least 2 (add Crossover or Mutate instructions)"
        )
    return GaConfig(pop_size=pop, generations=program.micro_generations)


@dataclass(frozen=True)
class ComparisonRow:
    problem: str
    baseline: SampleStats
    evolved: SampleStats
    delta: float  # percent improvement of evolved over baseline


def run_comparison(
    program: EAProgram,
    problems: list[Problem],
    runs: int,
    seed: int = 0,
    workers: int = 1,
) -> list[ComparisonRow]:
    """Score the evolved program and the budget-matched GA on every problem,
    runs independent repetitions each; rows follow the input order. Run r of
    problem k draws its rng from (seed, k, alg, r), so worker count never
    changes the result."""
    if runs < 2:
        raise ConfigError(f"runs must be >= 2 for sample statistics, got {runs}")
    ga_config = matched_ga_config(program)
    micro = MicroConfig(num_registers=program.num_registers)
    rows = []
    for k, problem in enumerate(problems):
        try:
            def evolved_run(r: int) -> float:
                rng = make_rng(seed, k, 0, r)
                return execute_run(program, problem, micro, rng).best_fitness

            def ga_run(r: int) -> float:
                return standard_ga_run(problem, ga_config, make_rng(seed, k, 1, r))

            evolved = summarize(map_indexed(evolved_run, range(runs), workers))
            baseline = summarize(map_indexed(ga_run, range(runs), workers))
            rows.append(
                ComparisonRow(
                    problem.name, baseline, evolved, delta_percent(baseline.mean, evolved.mean)
                )
            )
        except Exception as exc:
            raise EvaluationError(f"{problem.name}: {exc}", program) from exc
    return rows


CSV_HEADER = ["problem", "algorithm", "runs", "mean", "stddev", "delta_percent"]


def comparison_csv(rows: list[ComparisonRow], errors: list[tuple[str, str]] = ()) -> str:
    """CSV with one row per (problem, algorithm) and a delta row per problem;
    failed problems appear as error rows so partial results stay usable."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(
            [row.problem, "standard_ga", row.baseline.n,
             _num(row.baseline.mean), _num(row.baseline.stddev), ""]
        )
        writer.writerow(
            [row.problem, "evolved_ea", row.evolved.n,
             _num(row.evolved.mean), _num(row.evolved.stddev), ""]
        )
        writer.writerow([row.problem, "delta", row.evolved.n, "", "", f"{row.delta:.2f}"])
    for problem, message in errors:
        writer.writerow([problem, "error", "", "", "", message])
    return buf.getvalue()


def _num(x: float) -> str:
    return f"{x:.6g}"
