"""Workbench for evolving evolutionary algorithms.

The macro level searches over EA bodies encoded as linear programs of
genetic-operator instructions (lgp); the interpreter executes such programs
against pluggable problems (problems); bench compares an evolved program to
a budget-matched standard GA; the service and cli expose the whole thing.
"""

from .errors import ConfigError, EvaluationError, ParseError
from .interpreter import (
    MicroConfig,
    RunTrace,
    evals_per_generation,
    execute_run,
    parse_program,
    program_fitness,
    render_program,
    render_pseudocode,
)
from .lgp import EAProgram, Instruction, MacroConfig, Opcode, steady_state_search

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "ParseError",
    "EvaluationError",
    "Opcode",
    "Instruction",
    "EAProgram",
    "MacroConfig",
    "MicroConfig",
    "RunTrace",
    "steady_state_search",
    "execute_run",
    "program_fitness",
    "evals_per_generation",
    "parse_program",
    "render_program",
    "render_pseudocode",
    "__version__",
]
