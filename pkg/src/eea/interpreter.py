"""Execution of EA programs against a problem.

A run fills every population register with a random evaluated individual,
then sweeps the instruction sequence micro_generations times. Select copies
the fitter source register without re-evaluating; Crossover and Mutate create
and evaluate one new individual each, so a sweep costs exactly the program's
count of Crossover plus Mutate instructions in fitness evaluations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, ParseError
from .lgp import EAProgram, Instruction, Opcode
from .problems import Problem
from .rng import make_rng, map_indexed


@dataclass(frozen=True)
class MicroConfig:
    """Parameters of program execution and program fitness."""

    num_registers: int = 40
    runs_per_fitness: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.num_registers < 2:
            raise ConfigError(f"num_registers must be >= 2, got {self.num_registers}")
        if self.runs_per_fitness < 1:
            raise ConfigError(f"runs_per_fitness must be >= 1, got {self.runs_per_fitness}")


@dataclass(frozen=True)
class RunTrace:
    """best_per_generation[g] = best fitness seen after g sweeps (entry 0 is
    the initial population's best); eval_count counts problem evaluations."""

    best_per_generation: tuple[float, ...]
    eval_count: int

    @property
    def best_fitness(self) -> float:
        return self.best_per_generation[-1]


def evals_per_generation(program: EAProgram) -> int:
    """Problem evaluations one sweep of the program costs."""
    return sum(1 for inst in program.instructions if inst.op is not Opcode.SELECT)


def execute_run(
    program: EAProgram, problem: Problem, config: MicroConfig, rng: np.random.Generator
) -> RunTrace:
    """One run of the program; returns the best-fitness trace and the exact
    evaluation count (num_registers + micro_generations * sweep cost)."""
    if program.num_registers != config.num_registers:
        raise ConfigError(
            f"program expects {program.num_registers} registers, "
            f"config provides {config.num_registers}"
        )
    individuals = []
    fitnesses = []
    evals = 0
    for _ in range(config.num_registers):
        ind = problem.random_individual(rng)
        individuals.append(ind)
        fitnesses.append(problem.evaluate(ind))
        evals += 1
    best = min(fitnesses)
    trace = [best]

    body = [(inst.op, inst.dest, inst.src1, inst.src2) for inst in program.instructions]
    for _ in range(program.micro_generations):
        for op, dest, src1, src2 in body:
            if op is Opcode.SELECT:
                if fitnesses[src1] <= fitnesses[src2]:
                    individuals[dest] = individuals[src1]
                    fitnesses[dest] = fitnesses[src1]
                else:
                    individuals[dest] = individuals[src2]
                    fitnesses[dest] = fitnesses[src2]
            else:
                if op is Opcode.CROSSOVER:
                    child = problem.crossover(individuals[src1], individuals[src2], rng)
                else:
                    child = problem.mutate(individuals[src1], rng)
                fit = problem.evaluate(child)
                evals += 1
                individuals[dest] = child
                fitnesses[dest] = fit
            if fitnesses[dest] < best:
                best = fitnesses[dest]
        trace.append(best)
    return RunTrace(tuple(trace), evals)


def program_fitness(
    program: EAProgram, problem: Problem, config: MicroConfig, workers: int = 1
) -> float:
    """Mean best fitness over runs_per_fitness runs; run r draws its rng from
    (seed, r), so every program is scored on the same random number streams."""

    def one_run(r: int) -> float:
        return execute_run(program, problem, config, make_rng(config.seed, r)).best_fitness

    bests = map_indexed(one_run, range(config.runs_per_fitness), workers)
    return float(np.mean(bests))


# ---------------------------------------------------------------------------
# program text format ("EEA v1") and the C-style pseudocode listing

_RENDER = {
    Opcode.SELECT: "Pop[{d}] = Select(Pop[{a}], Pop[{b}]);",
    Opcode.CROSSOVER: "Pop[{d}] = Crossover(Pop[{a}], Pop[{b}]);",
    Opcode.MUTATE: "Pop[{d}] = Mutate(Pop[{a}]);",
}


def render_instruction(inst: Instruction) -> str:
    return _RENDER[inst.op].format(d=inst.dest, a=inst.src1, b=inst.src2)


def render_program(program: EAProgram) -> str:
    """Serialize to the EEA v1 format: a header naming the register count and
    loop bound, then one instruction per line."""
    lines = [
        "EEA v1",
        f"registers {program.num_registers}",
        f"generations {program.micro_generations}",
    ]
    lines += [render_instruction(inst) for inst in program.instructions]
    return "\n".join(lines) + "\n"


def render_pseudocode(program: EAProgram) -> str:
    """Human-oriented C-style listing of the same program."""
    lines = [
        f"void EA_Program(Individual Pop[{program.num_registers}])",
        "{",
        "    Randomly_initialize_the_population();",
        f"    for (int k = 0; k < {program.micro_generations}; k++)",
        "    {",
    ]
    lines += [f"        {render_instruction(inst)}" for inst in program.instructions]
    lines += ["    }", "}"]
    return "\n".join(lines) + "\n"


_INSTRUCTION_RE = re.compile(
    r"""Pop\s*\[\s*(\d+)\s*\]\s*=\s*(\w+)\s*\(\s*Pop\s*\[\s*(\d+)\s*\]\s*
        (?:,\s*Pop\s*\[\s*(\d+)\s*\]\s*)?\)\s*;?$""",
    re.VERBOSE,
)
_ARITY = {"Select": 2, "Crossover": 2, "Mutate": 1}


def _parse_instruction(line: str, lineno: int) -> Instruction:
    m = _INSTRUCTION_RE.match(line)
    if m is None:
        raise ParseError(f"not an instruction: {line!r}", lineno)
    dest, opname, src1 = int(m.group(1)), m.group(2), int(m.group(3))
    src2 = m.group(4)
    if opname not in _ARITY:
        raise ParseError(
            f"unknown operator {opname!r}, expected Select, Crossover or Mutate", lineno
        )
    arity = _ARITY[opname]
    if (src2 is None) != (arity == 1):
        raise ParseError(f"{opname} takes {arity} argument(s): {line!r}", lineno)
    src2 = src1 if src2 is None else int(src2)
    return Instruction(Opcode[opname.upper()], dest, src1, src2)


def parse_program(text: str) -> EAProgram:
    """Parse either the EEA v1 format or the pseudocode listing back into a
    program; errors carry 1-based line numbers."""
    numbered = [
        (i + 1, line.strip()) for i, line in enumerate(text.splitlines()) if line.strip()
    ]
    if not numbered:
        raise ParseError("empty program document")
    if numbered[0][1] == "EEA v1":
        return _parse_native(numbered)
    return _parse_pseudocode(numbered)


def _header_int(numbered, pos: int, key: str) -> int:
    if pos >= len(numbered):
        raise ParseError(f"missing '{key} <n>' header line", numbered[-1][0])
    lineno, line = numbered[pos]
    parts = line.split()
    if len(parts) != 2 or parts[0] != key:
        raise ParseError(f"expected '{key} <n>', got {line!r}", lineno)
    try:
        return int(parts[1])
    except ValueError:
        raise ParseError(f"expected an integer after {key!r}, got {parts[1]!r}", lineno) from None


def _build(instructions, registers, generations, lineno):
    try:
        return EAProgram(tuple(instructions), registers, generations)
    except ConfigError as exc:
        raise ParseError(str(exc), lineno) from None


def _parse_native(numbered) -> EAProgram:
    registers = _header_int(numbered, 1, "registers")
    generations = _header_int(numbered, 2, "generations")
    rest = numbered[3:]
    if not rest:
        raise ParseError("program has no instructions", numbered[-1][0])
    instructions = [_parse_instruction(line, lineno) for lineno, line in rest]
    return _build(instructions, registers, generations, numbered[0][0])


def _parse_pseudocode(numbered) -> EAProgram:
    registers = generations = None
    instructions = []
    header_re = re.compile(r"\w+\s*\(\s*\w+\s+Pop\s*\[\s*(\d+)\s*\]\s*\)")
    loop_re = re.compile(r"for\s*\(.*<\s*(\d+)\s*;")
    for lineno, line in numbered:
        if line in ("{", "}") or line.endswith("();") or line.rstrip(";").endswith("()"):
            continue
        if registers is None:
            m = header_re.search(line)
            if m:
                registers = int(m.group(1))
                continue
        if line.startswith("for"):
            m = loop_re.search(line)
            if m is None:
                raise ParseError(f"cannot read loop bound from {line!r}", lineno)
            generations = int(m.group(1))
            continue
        instructions.append(_parse_instruction(line.rstrip("{").strip(), lineno))
    if registers is None:
        raise ParseError("missing function header declaring the register count")
    if generations is None:
        raise ParseError("missing for-loop declaring the generation count")
    if not instructions:
        raise ParseError("program has no instructions")
    return _build(instructions, registers, generations, numbered[0][0])
