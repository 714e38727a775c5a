"""HTTP API over the workbench: evolve, run, bench, render.

Domain failures (bad values, malformed documents) map to 422 with the
underlying message; everything else is a plain 500.
"""

from __future__ import annotations

import io
import csv

from fastapi import FastAPI, HTTPException

from .. import bench as bench_mod
from ..config import ExperimentConfig
from ..errors import ConfigError, EvaluationError, ParseError
from ..interpreter import MicroConfig, execute_run, parse_program, program_fitness, render_program, render_pseudocode
from ..lgp import MacroConfig, steady_state_search
from ..problems import Problem, build_problem
from ..rng import make_rng, map_indexed
from ..stats import summarize
from .models import (
    BenchProblemError,
    BenchRequest,
    BenchResponse,
    BenchRow,
    EvolveRequest,
    EvolveResponse,
    ProblemSpec,
    RenderRequest,
    RenderResponse,
    RunRequest,
    RunResponse,
)

app = FastAPI(title="eea-workbench", version="0.1.0")


def _problem(spec) -> Problem:
    kwargs = spec.model_dump()
    return build_problem(**kwargs)


def _domain(exc: Exception) -> HTTPException:
    return HTTPException(status_code=422, detail=str(exc))


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/evolve")
def evolve(req: EvolveRequest) -> EvolveResponse:
    try:
        problem = _problem(req.problem)
        macro = MacroConfig(
            pop_size=req.macro.pop_size,
            code_length=req.macro.code_length,
            generations=req.macro.generations,
            crossover_prob=req.macro.crossover_prob,
            mutations_per_chromosome=req.macro.mutations_per_chromosome,
            seed=req.macro.seed,
        )
        micro = MicroConfig(
            num_registers=req.micro.registers,
            runs_per_fitness=req.micro.runs,
            seed=req.micro.seed,
        )

        def fitness(program) -> float:
            return program_fitness(program, problem, micro, workers=req.workers)

        result = steady_state_search(
            macro, micro.num_registers, req.micro.generations, fitness, workers=1
        )
    except (ConfigError, ParseError, ValueError, EvaluationError) as exc:
        raise _domain(exc) from exc
    history_csv = _history_csv(result.history)
    return EvolveResponse(
        program=render_program(result.best_program),
        best_fitness=result.best_fitness,
        history=result.history,
        history_csv=history_csv,
    )


@app.post("/run")
def run(req: RunRequest) -> RunResponse:
    try:
        program = parse_program(req.program)
        problem = _problem(req.problem)
        micro = MicroConfig(num_registers=program.num_registers)

        def one_run(r: int):
            return execute_run(program, problem, micro, make_rng(req.seed, r))

        traces = map_indexed(one_run, range(req.runs), req.workers)
        stats = summarize(t.best_fitness for t in traces)
    except (ConfigError, ParseError, ValueError, EvaluationError) as exc:
        raise _domain(exc) from exc
    trace_csv = _trace_csv(traces) if req.include_trace else None
    return RunResponse(
        runs=stats.n,
        mean=stats.mean,
        stddev=stats.stddev,
        best=min(t.best_fitness for t in traces),
        trace_csv=trace_csv,
    )


@app.post("/bench")
def run_bench(req: BenchRequest) -> BenchResponse:
    try:
        program = parse_program(req.program)
    except (ConfigError, ParseError) as exc:
        raise _domain(exc) from exc
    rows: list[BenchRow] = []
    core_rows = []
    errors: list[BenchProblemError] = []
    for idx, spec in enumerate(req.problems):
        label = _spec_label(spec, idx)
        try:
            problem = _problem(spec)
            # one problem at a time so a bad instance only loses its own row
            row = bench_mod.run_comparison(
                program, [problem], req.runs, seed=req.seed, workers=req.workers
            )[0]
        except (ConfigError, ParseError, ValueError, EvaluationError) as exc:
            errors.append(BenchProblemError(problem=label, message=str(exc)))
            continue
        core_rows.append(row)
        rows.append(
            BenchRow(
                problem=row.problem,
                runs=req.runs,
                baseline_mean=row.baseline.mean,
                baseline_stddev=row.baseline.stddev,
                evolved_mean=row.evolved.mean,
                evolved_stddev=row.evolved.stddev,
                delta_percent=row.delta,
            )
        )
    csv_text = bench_mod.comparison_csv(
        core_rows, [(e.problem, e.message) for e in errors]
    )
    return BenchResponse(rows=rows, errors=errors, csv=csv_text)


@app.post("/render")
def render(req: RenderRequest) -> RenderResponse:
    try:
        program = parse_program(req.program)
    except (ConfigError, ParseError) as exc:
        raise _domain(exc) from exc
    return RenderResponse(listing=render_pseudocode(program))


def _spec_label(spec: ProblemSpec, idx: int) -> str:
    if spec.kind == "function":
        return spec.function
    return spec.name or f"{spec.kind}[{idx}]"


def _history_csv(history: list[float]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["iteration", "best_fitness"])
    for i, value in enumerate(history):
        writer.writerow([i, repr(value)])
    return buf.getvalue()


def _trace_csv(traces) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["run", "generation", "best_fitness"])
    for r, trace in enumerate(traces):
        for g, value in enumerate(trace.best_per_generation):
            writer.writerow([r, g, repr(value)])
    return buf.getvalue()
