"""Command-line client for the workbench service.

Subcommands: evolve, run, bench, render, serve. Every command except serve
talks to the HTTP API; by default an in-process instance of the service,
with --server pointing at a remote one. Progress goes to standard error,
data to files or standard output, so pipelines stay clean.
"""

from __future__ import annotations

import argparse
import os
import sys

import httpx

from .config import parse_config
from .errors import ConfigError, EvaluationError, ParseError
from .problems.realopt import FUNCTION_IDS
from .service.models import (
    BenchRequest,
    EvolveRequest,
    MacroParams,
    MicroParams,
    RenderRequest,
    RunRequest,
)


class RemoteError(ValueError):
    """The service rejected a request (domain failure on the server side)."""


def _post(server: str | None, path: str, payload: dict) -> dict:
    if server:
        try:
            resp = httpx.post(server.rstrip("/") + path, json=payload, timeout=None)
        except httpx.HTTPError as exc:
            raise OSError(f"cannot reach server {server}: {exc}") from exc
    else:
        import warnings

        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            from fastapi.testclient import TestClient

        from .service.app import app

        resp = TestClient(app, raise_server_exceptions=True).post(path, json=payload)
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        raise RemoteError(f"{path} failed ({resp.status_code}): {detail}")
    return resp.json()


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _problem_spec(token: str, base_dir: str, args) -> dict:
    """Turn 'f3' or a path to a .tsp/.qap/.dat file into a problem spec."""
    if token in FUNCTION_IDS:
        return {
            "kind": "function",
            "function": token,
            "dimension": args.dimension,
            "sigma": args.sigma,
            "f5_absolute": args.f5_absolute,
        }
    path = token if os.path.isabs(token) else os.path.join(base_dir, token)
    suffix = os.path.splitext(token)[1].lower()
    name = os.path.splitext(os.path.basename(token))[0]
    if suffix == ".tsp":
        return {"kind": "tsp", "text": _read(path), "name": name}
    if suffix in (".qap", ".dat"):
        return {"kind": "qap", "text": _read(path), "name": name}
    raise ConfigError(
        f"cannot tell what problem {token!r} is: expected a function id "
        f"({', '.join(FUNCTION_IDS)}) or a .tsp/.qap/.dat file"
    )


def _progress(message: str) -> None:
    print(message, file=sys.stderr, flush=True)


# ---------------------------------------------------------------------------
# subcommands


def cmd_evolve(args) -> int:
    config = parse_config(_read(args.config))
    base_dir = os.path.dirname(os.path.abspath(args.config))
    problem = config.problem
    if problem.kind == "function":
        spec = {
            "kind": "function",
            "function": problem.function,
            "dimension": problem.dimension,
            "sigma": problem.sigma,
            "f5_absolute": problem.f5_absolute,
        }
    else:
        path = problem.file
        if not os.path.isabs(path):
            path = os.path.join(base_dir, path)
        name = problem.name or os.path.splitext(os.path.basename(problem.file))[0]
        spec = {"kind": problem.kind, "text": _read(path), "name": name}

    macro_seed = config.macro.seed if args.seed is None else args.seed
    micro_seed = config.micro.seed if args.seed is None else args.seed
    request = EvolveRequest(
        problem=spec,
        macro=MacroParams(
            pop_size=config.macro.pop_size,
            code_length=config.macro.code_length,
            generations=config.macro.generations,
            crossover_prob=config.macro.crossover_prob,
            mutations_per_chromosome=config.macro.mutations_per_chromosome,
            seed=macro_seed,
        ),
        micro=MicroParams(
            registers=config.micro.num_registers,
            generations=config.micro_generations,
            runs=config.micro.runs_per_fitness,
            seed=micro_seed,
        ),
        workers=args.workers,
    )
    _progress(
        f"evolving: macro pop {request.macro.pop_size}, code length "
        f"{request.macro.code_length}, {request.macro.generations} attempts, "
        f"R={request.micro.runs}"
    )
    result = _post(args.server, "/evolve", request.model_dump())

    out_dir = args.out or "."
    os.makedirs(out_dir, exist_ok=True)
    program_path = _join_out(out_dir, config.output.program)
    history_path = _join_out(out_dir, config.output.history)
    _write(program_path, result["program"])
    _write(history_path, result["history_csv"])
    _progress(f"best fitness {result['best_fitness']:.6g}")
    _progress(f"wrote {program_path}")
    _progress(f"wrote {history_path}")
    return 0


def cmd_run(args) -> int:
    request = RunRequest(
        program=_read(args.program),
        problem=_problem_spec(args.problem, ".", args),
        runs=args.runs,
        seed=args.seed if args.seed is not None else 0,
        workers=args.workers,
        include_trace=args.trace_out is not None,
    )
    result = _post(args.server, "/run", request.model_dump())
    if args.trace_out:
        _write(args.trace_out, result["trace_csv"])
        _progress(f"wrote {args.trace_out}")
    print(
        f"runs={result['runs']} mean={result['mean']:.6g} "
        f"stddev={result['stddev']:.6g} best={result['best']:.6g}"
    )
    return 0


def cmd_bench(args) -> int:
    base_dir = os.path.dirname(os.path.abspath(args.problems))
    specs = []
    skipped = []
    for lineno, raw in enumerate(_read(args.problems).splitlines(), start=1):
        token = raw.strip()
        if not token or token.startswith("#"):
            continue
        try:
            specs.append(_problem_spec(token, base_dir, args))
        except (OSError, ConfigError) as exc:
            # a bad list entry only loses its own row
            _progress(f"{args.problems}:{lineno}: {exc}")
            skipped.append((token, str(exc)))
    request = BenchRequest(
        program=_read(args.program),
        problems=specs,
        runs=args.runs,
        seed=args.seed if args.seed is not None else 0,
        workers=args.workers,
    )
    _progress(f"benchmarking {len(specs)} problem(s), {args.runs} runs each")
    result = _post(args.server, "/bench", request.model_dump())
    for err in result["errors"]:
        _progress(f"{err['problem']}: {err['message']}")
    csv_text = result["csv"]
    if skipped:
        csv_text += "".join(
            f"{_csv_quote(token)},error,,,,{_csv_quote(message)}\n"
            for token, message in skipped
        )
    if args.out:
        _write(args.out, csv_text)
        _progress(f"wrote {args.out}")
    else:
        sys.stdout.write(csv_text)
    return 0


def cmd_render(args) -> int:
    request = RenderRequest(program=_read(args.program))
    result = _post(args.server, "/render", request.model_dump())
    sys.stdout.write(result["listing"])
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _join_out(out_dir: str, path: str) -> str:
    return path if os.path.isabs(path) else os.path.join(out_dir, path)


def _write(path: str, text: str) -> None:
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _csv_quote(value: str) -> str:
    if any(c in value for c in ",\"\n"):
        return '"' + value.replace('"', '""') + '"'
    return value


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eea", description="Workbench for evolving evolutionary algorithms."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def shared(p):
        p.add_argument("--seed", type=int, default=None, help="master seed")
        p.add_argument("--workers", type=int, default=1, help="parallel fitness evaluations")
        p.add_argument("--server", default=None, help="remote service URL (default: in-process)")

    def problem_flags(p):
        p.add_argument("--dimension", type=int, default=5, help="dimension for f1..f10")
        p.add_argument("--sigma", type=float, default=0.01, help="mutation sigma for f1..f10")
        p.add_argument(
            "--f5-absolute", action="store_true",
            help="evaluate f5 on absolute component values",
        )

    p = sub.add_parser("evolve", help="evolve an EA program for a configured problem")
    p.add_argument("--config", required=True, help="experiment config file")
    p.add_argument("--out", default=None, help="output directory")
    shared(p)
    p.set_defaults(fn=cmd_evolve)

    p = sub.add_parser("run", help="run a program file against one problem")
    p.add_argument("--program", required=True, help="EEA v1 program file")
    p.add_argument("--problem", required=True, help="function id or .tsp/.qap/.dat file")
    p.add_argument("--runs", type=int, default=30)
    p.add_argument("--trace-out", default=None, help="write per-run best-fitness trace CSV")
    problem_flags(p)
    shared(p)
    p.set_defaults(fn=cmd_run)

    p = sub.add_parser("bench", help="compare a program against the budget-matched GA")
    p.add_argument("--program", required=True, help="EEA v1 program file")
    p.add_argument("--problems", required=True, help="file listing one problem per line")
    p.add_argument("--runs", type=int, default=30)
    p.add_argument("--out", default=None, help="CSV output path (default: standard output)")
    problem_flags(p)
    shared(p)
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("render", help="print a program as a C-style listing")
    p.add_argument("--program", required=True, help="EEA v1 program file")
    shared(p)
    p.set_defaults(fn=cmd_render)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ConfigError, ParseError, RemoteError, EvaluationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
