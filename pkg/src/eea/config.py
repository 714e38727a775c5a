"""Experiment configuration: sectioned key = value text.

Sections are [macro] (program search), [micro] (program execution),
[problem] and [output]. Unknown sections or keys are errors, so typos fail
fast instead of silently running defaults.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConfigError, ParseError
from .interpreter import MicroConfig
from .lgp import MacroConfig

_BOOLEANS = {"true": True, "yes": True, "1": True, "false": False, "no": False, "0": False}


def _parse_bool(value: str) -> bool:
    try:
        return _BOOLEANS[value.lower()]
    except KeyError:
        raise ValueError(f"expected a boolean, got {value!r}") from None


_SCHEMA = {
    "macro": {
        "pop_size": int,
        "code_length": int,
        "generations": int,
        "crossover_prob": float,
        "mutations_per_chromosome": int,
        "seed": int,
    },
    "micro": {"registers": int, "generations": int, "runs": int, "seed": int},
    "problem": {
        "kind": str,
        "function": str,
        "dimension": int,
        "sigma": float,
        "f5_absolute": _parse_bool,
        "file": str,
        "name": str,
    },
    "output": {"program": str, "history": str},
}


@dataclass(frozen=True)
class ProblemSettings:
    kind: str
    function: str = ""
    dimension: int = 5
    sigma: float = 0.01
    f5_absolute: bool = False
    file: str = ""
    name: str = ""


@dataclass(frozen=True)
class OutputSettings:
    program: str = "program.eea"
    history: str = "history.csv"


@dataclass(frozen=True)
class ExperimentConfig:
    macro: MacroConfig
    micro: MicroConfig
    micro_generations: int
    problem: ProblemSettings
    output: OutputSettings = field(default_factory=OutputSettings)


def parse_config(text: str) -> ExperimentConfig:
    values = _parse_sections(text)
    problem_raw = values.get("problem")
    if problem_raw is None or "kind" not in problem_raw:
        raise ConfigError("config needs a [problem] section with a 'kind' key")
    problem = ProblemSettings(**problem_raw)
    if problem.kind == "function":
        if not problem.function:
            raise ConfigError("problem kind 'function' needs a 'function' key (f1..f10)")
    elif problem.kind in ("tsp", "qap"):
        if not problem.file:
            raise ConfigError(f"problem kind {problem.kind!r} needs a 'file' key")
    else:
        raise ConfigError(
            f"unknown problem kind {problem.kind!r}, expected function, tsp or qap"
        )

    macro_raw = dict(values.get("macro", {}))
    # combinatorial training runs are costly, so their published setups use
    # fewer macro generations than function optimization
    if "generations" not in macro_raw and problem.kind != "function":
        macro_raw["generations"] = 50
    macro = MacroConfig(**macro_raw)
    micro_raw = dict(values.get("micro", {}))
    micro_generations = micro_raw.pop("generations", 100)
    if micro_generations < 1:
        raise ConfigError(f"micro generations must be >= 1, got {micro_generations}")
    runs = micro_raw.pop("runs", 500 if problem.kind == "function" else 25)
    micro = MicroConfig(
        num_registers=micro_raw.pop("registers", 40),
        runs_per_fitness=runs,
        seed=micro_raw.pop("seed", 0),
    )
    output = OutputSettings(**values.get("output", {}))
    return ExperimentConfig(macro, micro, micro_generations, problem, output)


def _parse_sections(text: str) -> dict[str, dict]:
    values: dict[str, dict] = {}
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip()
            if name not in _SCHEMA:
                raise ConfigError(
                    f"line {lineno}: unknown section [{name}], expected one of "
                    f"{sorted(_SCHEMA)}"
                )
            section = name
            values.setdefault(name, {})
            continue
        if section is None:
            raise ParseError(f"key outside any section: {line!r}", lineno)
        key, sep, value = line.partition("=")
        if not sep:
            raise ParseError(f"expected 'key = value', got {line!r}", lineno)
        key, value = key.strip(), value.strip()
        if key not in _SCHEMA[section]:
            raise ConfigError(
                f"line {lineno}: unknown key {key!r} in [{section}], expected one of "
                f"{sorted(_SCHEMA[section])}"
            )
        if key in values[section]:
            raise ConfigError(f"line {lineno}: duplicate key {key!r} in [{section}]")
        try:
            values[section][key] = _SCHEMA[section][key](value)
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: bad value for {key!r}: {exc}") from None
    return values
