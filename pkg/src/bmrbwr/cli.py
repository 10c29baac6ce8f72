"""Command-line front end: ``bmrbwr {run,suite,compare,plot,list}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import fields, replace
from pathlib import Path

from .core import ALGORITHMS, ConfigError, RunConfig
from .harness import (CRITERIA, ROW_HEADER, MismatchError, TraceFormatError, compare, export,
                      format_row, load_summaries, run_experiment)
from .problems import (SUITES, ExpressionError, UnknownProblemError, available,
                       default_budget, load_problem, lookup, suite)

EXIT_OK, EXIT_INPUT, EXIT_CONFIG = 0, 1, 2

_CONFIG_KEYS = {f.name for f in fields(RunConfig)}
# flag dest -> RunConfig field
_FLAG_MAP = {
    "pop": "population_size",
    "budget": "max_function_evaluations",
    "penalty_weight": "penalty_weight",
    "eq_tol": "equality_tolerance",
    "success_tol": "success_tolerance",
    "seed": "seed",
}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _out_dir(args) -> Path:
    return Path(args.out or os.environ.get("BMRBWR_OUT") or "results")


def _algorithms(text: str) -> list[str]:
    algos = [a.strip().lower() for a in text.split(",") if a.strip()]
    bad = [a for a in algos if a not in ALGORITHMS]
    if not algos or bad:
        raise CliError(f"unknown algorithm(s): {', '.join(bad) or text!r}; "
                       f"choose from {', '.join(ALGORITHMS)}", EXIT_CONFIG)
    return algos


def _load_config_file(path) -> dict:
    if path is None:
        return {}
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read config {path}: {exc}", EXIT_CONFIG) from exc
    if not isinstance(data, dict):
        raise CliError(f"config {path} must hold a JSON object", EXIT_CONFIG)
    unknown = set(data) - _CONFIG_KEYS - {"n_runs"}
    if unknown:
        raise CliError(f"unknown config keys: {', '.join(sorted(unknown))}", EXIT_CONFIG)
    return data


def _settings(args) -> tuple[dict, int]:
    """Merge defaults < config file < flags. Returns (RunConfig overrides, n_runs)."""
    merged = _load_config_file(args.config)
    n_runs = merged.pop("n_runs", 30)
    merged.pop("algorithm", None)
    for flag, key in _FLAG_MAP.items():
        value = getattr(args, flag, None)
        if value is not None:
            merged[key] = value
    if args.runs is not None:
        n_runs = args.runs
    if not isinstance(n_runs, int) or n_runs < 1:
        raise CliError("--runs must be a positive integer", EXIT_CONFIG)
    return merged, n_runs


def _config_for(problem, overrides: dict, algorithm: str) -> RunConfig:
    values = dict(overrides)
    values.setdefault("max_function_evaluations", default_budget(problem))
    values["algorithm"] = algorithm
    try:
        return RunConfig(**values)
    except (ConfigError, TypeError) as exc:
        raise CliError(f"invalid configuration: {exc}", EXIT_CONFIG) from exc


def _validate_overrides(overrides: dict) -> None:
    # surface bad values before any problem lookup or computation
    probe = dict(overrides)
    pop = probe.get("population_size", RunConfig.population_size)
    probe.setdefault("max_function_evaluations", max(pop if isinstance(pop, int) else 3, 3))
    try:
        RunConfig(**probe)
    except (ConfigError, TypeError) as exc:
        raise CliError(f"invalid configuration: {exc}", EXIT_CONFIG) from exc


def _resolve_problem(args):
    if args.problem_file:
        try:
            return load_problem(args.problem_file)
        except (OSError, ExpressionError) as exc:
            raise CliError(f"cannot load problem file: {exc}", EXIT_INPUT) from exc
    if not args.problem:
        raise CliError("one of --problem or --problem-file is required", EXIT_INPUT)
    try:
        return lookup(args.problem)
    except UnknownProblemError as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc


def _experiments(problem, algos, overrides, n_runs, out: Path, traces: bool):
    summaries = []
    all_results = []
    for algo in algos:
        cfg = _config_for(problem, overrides, algo)
        summary, results = run_experiment(problem, algo, cfg, n_runs, cfg.seed)
        summaries.append(summary)
        all_results.extend(results)
        print(format_row(summary), flush=True)
    if traces:
        export(all_results, out / f"{problem.name}_convergence.csv")
    return summaries


def cmd_run(args) -> int:
    overrides, n_runs = _settings(args)
    _validate_overrides(overrides)
    algos = _algorithms(args.algo)
    problem = _resolve_problem(args)
    out = _out_dir(args)
    print(ROW_HEADER)
    summaries = _experiments(problem, algos, overrides, n_runs, out, traces=True)
    export(summaries, out / f"{problem.name}_summary.json")
    return EXIT_OK


def cmd_suite(args) -> int:
    overrides, n_runs = _settings(args)
    _validate_overrides(overrides)
    algos = _algorithms(args.algo)
    try:
        problems = suite(args.name)
    except UnknownProblemError as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc
    out = _out_dir(args)
    print(ROW_HEADER)
    summaries = []
    for problem in problems:
        summaries.extend(_experiments(problem, algos, overrides, n_runs, out, args.traces))
    export(summaries, out / f"{args.name}_summaries.json")
    for algo in algos:
        export([s for s in summaries if s.algorithm == algo],
               out / f"{args.name}_{algo}_summaries.json")
    return EXIT_OK


def _pick(summaries, algo):
    if algo is None:
        return summaries
    return [s for s in summaries if s.algorithm == algo]


def cmd_compare(args) -> int:
    try:
        loaded = [load_summaries(p) for p in args.files]
    except (OSError, ValueError, TypeError) as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc
    if len(loaded) == 1:
        if not (args.a and args.b):
            raise CliError("a single summary file needs --a and --b algorithm filters",
                           EXIT_INPUT)
        side_a, side_b = _pick(loaded[0], args.a), _pick(loaded[0], args.b)
    else:
        side_a, side_b = _pick(loaded[0], args.a), _pick(loaded[1], args.b)
    if not side_a or not side_b:
        raise CliError("no summaries selected for comparison", EXIT_INPUT)
    criteria = [c.strip() for c in args.criteria.split(",")] if args.criteria else CRITERIA
    try:
        matrix = compare(side_a, side_b, criteria, args.tol)
    except MismatchError as exc:
        raise CliError(f"cannot compare: {exc}", EXIT_INPUT) from exc
    except ValueError as exc:
        raise CliError(str(exc), EXIT_CONFIG) from exc
    print(matrix.table())
    return EXIT_OK


def cmd_plot(args) -> int:
    from .plot import plot_csv

    src = Path(args.csv)
    target = _out_dir(args) / (args.name or f"{src.stem}.svg")
    try:
        plot_csv(src, target, title=args.title or src.stem, log_scale=args.log)
    except TraceFormatError as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc
    print(target)
    return EXIT_OK


def cmd_list(args) -> int:
    if args.suite:
        try:
            names = [p.name for p in suite(args.suite)]
        except UnknownProblemError as exc:
            raise CliError(str(exc), EXIT_INPUT) from exc
    else:
        names = available()
    for name in names:
        print(name)
    return EXIT_OK


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--algo", default="bwr", help="comma list of bmr,bwr")
    p.add_argument("--runs", type=int, help="independent runs (default 30)")
    p.add_argument("--seed", type=int, help="seed of the first run")
    p.add_argument("--pop", type=int, help="population size")
    p.add_argument("--budget", type=int, help="function evaluations per run")
    p.add_argument("--penalty-weight", type=float)
    p.add_argument("--eq-tol", type=float, help="equality constraint tolerance")
    p.add_argument("--success-tol", type=float)
    p.add_argument("--config", help="JSON file with RunConfig fields")
    p.add_argument("--out", help="output directory (default $BMRBWR_OUT or ./results)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bmrbwr", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run one problem")
    p.add_argument("--problem")
    p.add_argument("--problem-file", help="problem definition file")
    _add_run_flags(p)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("suite", help="run a whole suite")
    p.add_argument("name", help=" or ".join(SUITES))
    p.add_argument("--traces", action="store_true", help="also write convergence CSVs")
    _add_run_flags(p)
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("compare", help="better/similar/inferior counts of two summary sets")
    p.add_argument("files", nargs="+", metavar="SUMMARY_JSON")
    p.add_argument("--a", help="algorithm taken from the first file")
    p.add_argument("--b", help="algorithm taken from the second (or only) file")
    p.add_argument("--criteria", help=f"comma list from {','.join(CRITERIA)}")
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("plot", help="SVG convergence plot from a trace CSV")
    p.add_argument("csv")
    p.add_argument("--out", help="output directory")
    p.add_argument("--name", help="file name of the SVG")
    p.add_argument("--title")
    p.add_argument("--log", action="store_true", help="log10 y axis")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("list", help="list problems")
    p.add_argument("--suite")
    p.set_defaults(func=cmd_list)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "files", None) is not None and len(args.files) > 2:
        print("error: compare takes one or two summary files", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
