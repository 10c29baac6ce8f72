"""Repeated independent runs, summary statistics, comparisons and trace export."""

from __future__ import annotations

import csv
import json
import math
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from .core import ALGORITHMS, ConfigError, RunConfig, RunResult, run
from .penalty import MAXIMIZE, MINIMIZE, check_sense
from .rng import RandomStream

CRITERIA = ("best", "median", "mean", "worst", "std_dev", "FR", "MV", "SR", "MFE")
# criteria where a larger value wins regardless of optimisation sense
_LARGER_BETTER = {"FR", "SR"}
_SENSE_DEPENDENT = {"best", "median", "mean", "worst"}

TRACE_HEADER = ("run_id", "iteration", "fe_count", "best_penalized", "mean_penalized")


class RunFailure(RuntimeError):
    """A single run inside an experiment raised; carries the run index."""

    def __init__(self, index: int, seed: int, cause: BaseException):
        super().__init__(f"run {index} (seed {seed}) failed: {cause}")
        self.index = index
        self.seed = seed


class MismatchError(ValueError):
    pass


class TraceFormatError(ValueError):
    pass


@dataclass
class ExperimentSummary:
    problem: str
    algorithm: str
    n_runs: int
    best: float
    median: float
    mean: float
    worst: float
    std_dev: float
    FR: float
    MV: float
    SR: float
    MFE: float
    sense: str = MINIMIZE
    base_seed: int = 0
    config: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        # strict JSON has no NaN; statistics are NaN only when no run was feasible
        for key in ("best", "median", "mean", "worst", "std_dev"):
            if isinstance(d[key], float) and math.isnan(d[key]):
                d[key] = None
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentSummary":
        d = dict(d)
        for key in ("best", "median", "mean", "worst", "std_dev"):
            if d.get(key) is None:
                d[key] = math.nan
        known = {f for f in cls.__dataclass_fields__}
        return cls(**{k: v for k, v in d.items() if k in known})

    def row(self) -> str:
        return format_row(self)


def summarize(values: Iterable[float], sense: str = MINIMIZE):
    """(best, median, mean, worst, std) of ``values``; std divides by N."""
    check_sense(sense)
    v = np.asarray(list(values), dtype=float)
    if v.size == 0:
        raise ValueError("summarize needs at least one value")
    best, worst = (v.min(), v.max()) if sense == MINIMIZE else (v.max(), v.min())
    return float(best), float(np.median(v)), float(v.mean()), float(worst), float(v.std())


def mfe(results: Sequence[RunResult], budget: int) -> float:
    """Mean evaluations to success; runs that never succeed are charged ``budget``."""
    if not results:
        return float("nan")
    fes = [r.fe_to_success if r.fe_to_success is not None else budget for r in results]
    return float(np.mean(fes))


def _summary_from_results(problem, algorithm: str, results: Sequence[RunResult],
                          config: RunConfig, base_seed: int) -> ExperimentSummary:
    n = len(results)
    feasible = [r.best_feasible.objective for r in results if r.best_feasible is not None]
    if feasible:
        stats = summarize(feasible, problem.sense)
    else:
        stats = (math.nan,) * 5
    fr = 100.0 * len(feasible) / n
    sr = 100.0 * sum(r.fe_to_success is not None for r in results) / n
    mv = float(np.mean([r.best.mean_violation for r in results]))
    return ExperimentSummary(problem=problem.name, algorithm=algorithm, n_runs=n,
                             best=stats[0], median=stats[1], mean=stats[2], worst=stats[3],
                             std_dev=stats[4], FR=fr, MV=mv, SR=sr,
                             MFE=mfe(results, config.max_function_evaluations),
                             sense=problem.sense, base_seed=base_seed,
                             config=config.to_dict())


def run_experiment(problem, algorithm: str, config: Optional[RunConfig] = None,
                   n_runs: int = 30, base_seed: int = 0):
    """Run ``n_runs`` independent optimisations; run ``i`` is seeded ``base_seed + i``.

    Objective statistics use each run's best feasible objective and skip runs
    that never found a feasible point; FR and MV count every run.
    Returns ``(summary, results)``.
    """
    if n_runs < 1:
        raise ConfigError("n_runs must be at least 1")
    if algorithm not in ALGORITHMS:
        raise ConfigError(f"unknown algorithm {algorithm!r}")
    config = replace(config or RunConfig(), algorithm=algorithm)
    config.validate()
    results = []
    for i in range(n_runs):
        seed = base_seed + i
        cfg = replace(config, seed=seed)
        try:
            results.append(run(problem, cfg, RandomStream(seed)))
        except Exception as exc:
            raise RunFailure(i, seed, exc) from exc
    summary = _summary_from_results(problem, algorithm, results, replace(config, seed=base_seed),
                                    base_seed)
    return summary, results


@dataclass
class CriterionCount:
    better: int = 0
    similar: int = 0
    inferior: int = 0

    @property
    def total(self) -> int:
        return self.better + self.similar + self.inferior

    @property
    def success_percent(self) -> float:
        return 100.0 * (self.better + self.similar) / self.total if self.total else math.nan


@dataclass
class ComparisonMatrix:
    counts: dict
    problems: list
    label_a: str = "A"
    label_b: str = "B"

    @property
    def success_percent(self) -> float:
        tot = sum(c.total for c in self.counts.values())
        ok = sum(c.better + c.similar for c in self.counts.values())
        return 100.0 * ok / tot if tot else math.nan

    def table(self) -> str:
        lines = [f"{self.label_a} vs {self.label_b} over {len(self.problems)} problems",
                 f"{'criterion':<10}{'better':>8}{'similar':>9}{'inferior':>10}{'success%':>10}"]
        for name, c in self.counts.items():
            lines.append(f"{name:<10}{c.better:>8}{c.similar:>9}{c.inferior:>10}"
                         f"{c.success_percent:>10.2f}")
        return "\n".join(lines)


def _classify(a: float, b: float, larger_better: bool, tol: float) -> int:
    """+1 if ``a`` wins, 0 if similar, -1 if ``a`` loses."""
    a_nan, b_nan = math.isnan(a), math.isnan(b)
    if a_nan or b_nan:
        return 0 if a_nan and b_nan else (-1 if a_nan else 1)
    if a == b or abs(a - b) <= tol * max(1.0, abs(a), abs(b)):
        return 0
    return 1 if (a > b) == larger_better else -1


def compare(summaries_a: Sequence[ExperimentSummary], summaries_b: Sequence[ExperimentSummary],
            criteria: Sequence[str] = CRITERIA, tolerance: float = 1e-6) -> ComparisonMatrix:
    """Count problems where A is better / similar-or-equal / inferior to B.

    Two values are similar when ``|a - b| <= tolerance * max(1, |a|, |b|)``.
    """
    a = {s.problem: s for s in summaries_a}
    b = {s.problem: s for s in summaries_b}
    if len(a) != len(summaries_a) or len(b) != len(summaries_b):
        raise MismatchError("duplicate problem in a summary set")
    if set(a) != set(b):
        only = sorted(set(a) ^ set(b))
        raise MismatchError(f"problem sets differ: {', '.join(only)}")
    for name in criteria:
        if name not in CRITERIA:
            raise ValueError(f"unknown criterion {name!r}")
    problems = [s.problem for s in summaries_a]
    counts = {name: CriterionCount() for name in criteria}
    for p in problems:
        sa, sb = a[p], b[p]
        for name in criteria:
            if name in _LARGER_BETTER:
                larger = True
            elif name in _SENSE_DEPENDENT:
                larger = sa.sense == MAXIMIZE
            else:
                larger = False
            verdict = _classify(float(getattr(sa, name)), float(getattr(sb, name)), larger,
                                tolerance)
            c = counts[name]
            if verdict > 0:
                c.better += 1
            elif verdict < 0:
                c.inferior += 1
            else:
                c.similar += 1
    label_a = summaries_a[0].algorithm if summaries_a else "A"
    label_b = summaries_b[0].algorithm if summaries_b else "B"
    return ComparisonMatrix(counts, problems, label_a, label_b)


ROW_HEADER = (f"{'problem':<28}{'algo':<5}{'best':>14}{'median':>14}{'mean':>14}{'worst':>14}"
              f"{'std':>12}{'FR':>7}{'MV':>11}{'SR':>7}{'MFE':>11}")


def format_row(s: ExperimentSummary) -> str:
    return (f"{s.problem:<28}{s.algorithm:<5}{s.best:>14.6e}{s.median:>14.6e}{s.mean:>14.6e}"
            f"{s.worst:>14.6e}{s.std_dev:>12.4e}{s.FR:>7.1f}{s.MV:>11.3e}{s.SR:>7.1f}"
            f"{s.MFE:>11.1f}")


def _fmt(x) -> str:
    return format(float(x), ".17g")


def _open_for_write(path: Path):
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        return open(path, "w", newline="")
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write {path}: {exc.strerror}") from exc


def export(obj, path, fmt: Optional[str] = None) -> Path:
    """Write run traces as CSV or summaries as JSON.

    CSV rows are tagged ``<algorithm>:<seed>`` so mixed-algorithm files can be
    regrouped; floats are written with 17 significant digits.
    """
    path = Path(path)
    fmt = (fmt or path.suffix.lstrip(".")).lower()
    if fmt not in ("csv", "json"):
        raise ValueError(f"unsupported export format {fmt!r}")
    items = list(obj) if isinstance(obj, (list, tuple)) else [obj]
    if fmt == "csv":
        if not all(isinstance(r, RunResult) for r in items):
            raise TypeError("CSV export expects RunResult objects")
        with _open_for_write(path) as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(TRACE_HEADER)
            for r in items:
                rid = f"{r.algorithm}:{r.seed}"
                for it, fe, b, m in zip(r.iterations, r.fe_counts, r.best_penalized,
                                        r.mean_penalized):
                    w.writerow((rid, int(it), int(fe), _fmt(b), _fmt(m)))
    else:
        payload = [s.to_dict() if isinstance(s, ExperimentSummary) else s for s in items]
        with _open_for_write(path) as fh:
            json.dump(payload, fh, indent=2, allow_nan=False)
            fh.write("\n")
    return path


def read_trace_csv(path) -> dict:
    """Parse a convergence CSV into ``{run_id: {column: ndarray}}`` (file order kept)."""
    path = Path(path)
    try:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise TraceFormatError(f"cannot read {path}: {exc.strerror}") from exc
    if not rows or tuple(rows[0]) != TRACE_HEADER:
        raise TraceFormatError(f"{path}: missing or unexpected header")
    if len(rows) == 1:
        raise TraceFormatError(f"{path}: no data rows")
    grouped: dict = {}
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(TRACE_HEADER):
            raise TraceFormatError(f"{path}:{lineno}: expected {len(TRACE_HEADER)} fields")
        try:
            rec = (int(row[1]), int(row[2]), float(row[3]), float(row[4]))
        except ValueError as exc:
            raise TraceFormatError(f"{path}:{lineno}: {exc}") from exc
        grouped.setdefault(row[0], []).append(rec)
    out = {}
    for rid, recs in grouped.items():
        it, fe, b, m = zip(*recs)
        out[rid] = {"iteration": np.array(it), "fe_count": np.array(fe),
                    "best_penalized": np.array(b), "mean_penalized": np.array(m)}
    return out


def load_summaries(path) -> list[ExperimentSummary]:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except OSError as exc:
        raise OSError(exc.errno, f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON ({exc})") from exc
    if isinstance(data, dict):
        data = [data]
    return [ExperimentSummary.from_dict(d) for d in data]
