"""Request and response schemas of the HTTP API.

Problem instances travel inline as text (TSPLIB/QAPLIB documents), programs
as EEA v1 text, so the service never assumes a shared filesystem with its
clients.
"""

from __future__ import annotations

from typing import Annotated, Literal, Union

from pydantic import BaseModel, Field


class FunctionProblemSpec(BaseModel):
    kind: Literal["function"] = "function"
    function: str
    dimension: int = 5
    sigma: float = 0.01
    f5_absolute: bool = False


class TspProblemSpec(BaseModel):
    kind: Literal["tsp"] = "tsp"
    text: str
    name: str = ""


class QapProblemSpec(BaseModel):
    kind: Literal["qap"] = "qap"
    text: str
    name: str = ""


ProblemSpec = Annotated[
    Union[FunctionProblemSpec, TspProblemSpec, QapProblemSpec],
    Field(discriminator="kind"),
]


class MacroParams(BaseModel):
    pop_size: int = 500
    code_length: int = 80
    generations: int = 100
    crossover_prob: float = 0.7
    mutations_per_chromosome: int = 5
    seed: int = 0


class MicroParams(BaseModel):
    registers: int = 40
    generations: int = 100
    runs: int = 500
    seed: int = 0


class EvolveRequest(BaseModel):
    problem: ProblemSpec
    macro: MacroParams = MacroParams()
    micro: MicroParams = MicroParams()
    workers: int = 1


class EvolveResponse(BaseModel):
    program: str  # EEA v1 text
    best_fitness: float
    history: list[float]
    history_csv: str


class RunRequest(BaseModel):
    program: str
    problem: ProblemSpec
    runs: int = 30
    seed: int = 0
    workers: int = 1
    include_trace: bool = False


class RunResponse(BaseModel):
    runs: int
    mean: float
    stddev: float
    best: float
    trace_csv: str | None = None


class BenchRequest(BaseModel):
    program: str
    problems: list[ProblemSpec]
    runs: int = 30
    seed: int = 0
    workers: int = 1


class BenchRow(BaseModel):
    problem: str
    runs: int
    baseline_mean: float
    baseline_stddev: float
    evolved_mean: float
    evolved_stddev: float
    delta_percent: float


class BenchProblemError(BaseModel):
    problem: str
    message: str


class BenchResponse(BaseModel):
    rows: list[BenchRow]
    errors: list[BenchProblemError]
    csv: str


class RenderRequest(BaseModel):
    program: str


class RenderResponse(BaseModel):
    listing: str
