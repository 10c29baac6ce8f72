"""Population, trial rules, greedy selection and the budgeted run loop."""

from __future__ import annotations

from dataclasses import dataclass, field, asdict
from typing import Optional

import numpy as np

from . import kernels
from .kernels import BMR, BWR
from .penalty import (DEFAULT_EQ_TOL, DEFAULT_WEIGHT, MAXIMIZE, MINIMIZE, check_sense,
                      penalize_batch, violation_batch)

ALGORITHMS = {"bmr": BMR, "bwr": BWR}


class ConfigError(ValueError):
    """Invalid run configuration."""


@dataclass(frozen=True)
class Bounds:
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=float).ravel()
        upper = np.asarray(self.upper, dtype=float).ravel()
        if lower.shape != upper.shape:
            raise ValueError("lower and upper bounds differ in length")
        if not np.all(lower < upper):
            raise ValueError("every lower bound must be strictly below its upper bound")
        lower.flags.writeable = False
        upper.flags.writeable = False
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def uniform(cls, low: float, high: float, dimension: int) -> "Bounds":
        return cls(np.full(dimension, float(low)), np.full(dimension, float(high)))

    @property
    def dimension(self) -> int:
        return self.lower.shape[0]

    def contains(self, x) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all((x >= self.lower) & (x <= self.upper)))


def clamp(v, bounds: Bounds) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.shape[-1] != bounds.dimension:
        raise ValueError(f"vector length {v.shape[-1]} does not match bounds ({bounds.dimension})")
    return np.minimum(bounds.upper, np.maximum(bounds.lower, v))


@dataclass(frozen=True)
class Candidate:
    position: np.ndarray
    objective: float
    violations: np.ndarray
    penalized: float
    g_values: np.ndarray = field(default_factory=lambda: np.zeros(0))
    h_values: np.ndarray = field(default_factory=lambda: np.zeros(0))

    @property
    def feasible(self) -> bool:
        return bool(np.all(self.violations == 0.0))

    @property
    def mean_violation(self) -> float:
        return float(self.violations.mean()) if self.violations.size else 0.0


@dataclass(frozen=True)
class RunConfig:
    population_size: int = 20
    max_function_evaluations: int = 100_000
    algorithm: str = "bwr"
    penalty_weight: float = DEFAULT_WEIGHT
    equality_tolerance: float = DEFAULT_EQ_TOL
    seed: int = 0
    success_tolerance: float = 1e-8

    def __post_init__(self):
        object.__setattr__(self, "algorithm", str(self.algorithm).lower())
        self.validate()

    def validate(self) -> None:
        if self.algorithm not in ALGORITHMS:
            raise ConfigError(f"algorithm must be one of {sorted(ALGORITHMS)}, got {self.algorithm!r}")
        if int(self.population_size) != self.population_size or self.population_size < 3:
            raise ConfigError("population_size must be an integer >= 3")
        if int(self.max_function_evaluations) != self.max_function_evaluations:
            raise ConfigError("max_function_evaluations must be an integer")
        if self.max_function_evaluations < self.population_size:
            raise ConfigError("max_function_evaluations must cover at least the initial population")
        if not self.penalty_weight > 0:
            raise ConfigError("penalty_weight must be positive")
        if not self.equality_tolerance >= 0:
            raise ConfigError("equality_tolerance must be non-negative")
        if not self.success_tolerance > 0:
            raise ConfigError("success_tolerance must be positive")

    def to_dict(self) -> dict:
        return asdict(self)


class Population:
    """Evaluated candidates stored column-wise, plus the frozen role indices.

    ``best_index``/``worst_index``/``mean_position`` only change when
    :meth:`refresh` is called, so a whole iteration sees the same roles.
    """

    def __init__(self, positions, objectives, penalized, violations, sense=MINIMIZE,
                 g_values=None, h_values=None):
        self.positions = np.ascontiguousarray(positions, dtype=float)
        self.objectives = np.asarray(objectives, dtype=float)
        self.penalized = np.asarray(penalized, dtype=float)
        n = self.positions.shape[0]
        self.violations = np.asarray(violations, dtype=float).reshape(n, -1)
        self.g_values = np.zeros((n, 0)) if g_values is None else np.asarray(g_values, float)
        self.h_values = np.zeros((n, 0)) if h_values is None else np.asarray(h_values, float)
        self.sense = check_sense(sense)
        self.refresh()

    @property
    def size(self) -> int:
        return self.positions.shape[0]

    @property
    def scores(self) -> np.ndarray:
        """Penalized fitness in minimisation form."""
        return self.penalized if self.sense == MINIMIZE else -self.penalized

    def refresh(self) -> None:
        scores = self.scores
        self.best_index = int(np.argmin(scores))
        self.worst_index = int(np.argmax(scores))
        self.mean_position = self.positions.mean(axis=0)

    def candidate(self, k: int) -> Candidate:
        return Candidate(self.positions[k].copy(), float(self.objectives[k]),
                         self.violations[k].copy(), float(self.penalized[k]),
                         self.g_values[k].copy(), self.h_values[k].copy())

    @property
    def members(self) -> list[Candidate]:
        return [self.candidate(k) for k in range(self.size)]

    def replace(self, mask, positions, objectives, penalized, violations, g_values, h_values):
        self.positions[mask] = positions[mask]
        self.objectives[mask] = objectives[mask]
        self.penalized[mask] = penalized[mask]
        if self.violations.shape[1]:
            self.violations[mask] = violations[mask]
            if self.g_values.shape[1]:
                self.g_values[mask] = g_values[mask]
            if self.h_values.shape[1]:
                self.h_values[mask] = h_values[mask]


@dataclass(frozen=True)
class IterationRecord:
    iteration: int
    fe_count: int
    best_penalized: float
    mean_penalized: float


@dataclass
class RunResult:
    best: Candidate
    fe_used: int
    fe_to_success: Optional[int]
    iterations: np.ndarray
    fe_counts: np.ndarray
    best_penalized: np.ndarray
    mean_penalized: np.ndarray
    best_feasible: Optional[Candidate] = None
    algorithm: str = "bwr"
    seed: int = 0
    final_population: Optional[Population] = None

    @property
    def trace(self) -> list[IterationRecord]:
        return [IterationRecord(int(i), int(f), float(b), float(m)) for i, f, b, m in
                zip(self.iterations, self.fe_counts, self.best_penalized, self.mean_penalized)]

    @property
    def feasible_found(self) -> bool:
        return self.best_feasible is not None

    @property
    def completed_iterations(self) -> int:
        return int(self.iterations[-1]) if self.iterations.size else 0


def _evaluate(problem, X, config: RunConfig):
    # degenerate points (e.g. 0/0 on a bound) become +-inf fitness downstream
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        f, G, H = problem.evaluate_batch(X)
    pen = penalize_batch(f, G, H, config.penalty_weight, problem.sense)
    viol = violation_batch(G, H, config.equality_tolerance)
    return f, G, H, pen, viol


def population_from_positions(problem, positions, config: RunConfig) -> Population:
    positions = np.ascontiguousarray(positions, dtype=float)
    f, G, H, pen, viol = _evaluate(problem, positions, config)
    return Population(positions, f, pen, viol, problem.sense, G, H)


def initialize_population(problem, config: RunConfig, rng) -> Population:
    """Uniform random population within the problem bounds (n evaluations)."""
    n, m = config.population_size, problem.dimension
    lower, upper = problem.bounds.lower, problem.bounds.upper
    u = rng.uniforms(n * m).reshape(n, m)
    positions = lower + (upper - lower) * u
    return population_from_positions(problem, positions, config)


def _role_vectors(pop: Population):
    return pop.positions[pop.best_index], pop.positions[pop.worst_index], pop.mean_position


def _trial(rule, k, pop: Population, bounds: Bounds, rng) -> np.ndarray:
    if not 0 <= k < pop.size:
        raise IndexError(f"candidate index {k} out of range")
    best, worst, mean = _role_vectors(pop)
    out = kernels.trial_rows(pop.positions, best, worst, mean, bounds.lower, bounds.upper,
                             rule, rng, np.array([k]))
    return out[0]


def bmr_trial(k: int, pop: Population, bounds: Bounds, rng) -> np.ndarray:
    """Best-mean-random trial vector for candidate ``k``.

    With probability 1/2 (``r4 > 0.5``) every variable moves as::

        v + r1 * (best - T * mean) + r2 * (best - partner)

    otherwise the candidate is resampled as ``upper - (upper - lower) * r3``.
    r1, r2, r3 are drawn per variable; partner, T and r4 once per call.
    """
    return _trial(BMR, k, pop, bounds, rng)


def bwr_trial(k: int, pop: Population, bounds: Bounds, rng) -> np.ndarray:
    """Best-worst-random trial: ``v + r1 * (best - T * partner) - r2 * (worst - partner)``."""
    return _trial(BWR, k, pop, bounds, rng)


def greedy_select(current: Candidate, trial: Candidate, sense: str = MINIMIZE) -> Candidate:
    check_sense(sense)
    if sense == MINIMIZE:
        return trial if trial.penalized < current.penalized else current
    return trial if trial.penalized > current.penalized else current


class _Tracker:
    """Feasible-best and first-success bookkeeping over every evaluation."""

    def __init__(self, problem, config: RunConfig):
        self.sign = 1.0 if problem.sense == MINIMIZE else -1.0
        self.known_best = problem.known_best
        self.tol = config.success_tolerance
        self.fe_to_success = None
        self.best_score = np.inf
        self.best_row = None

    def update(self, fe_before, positions, f, G, H, pen, viol):
        feasible = np.all(viol == 0.0, axis=1) & np.isfinite(f)
        if not feasible.any():
            return
        if self.fe_to_success is None and self.known_best is not None:
            hit = feasible & (np.abs(f - self.known_best) <= self.tol)
            if hit.any():
                self.fe_to_success = fe_before + int(np.argmax(hit)) + 1
        score = np.where(feasible, self.sign * f, np.inf)
        i = int(np.argmin(score))
        if score[i] < self.best_score:
            self.best_score = score[i]
            self.best_row = Candidate(positions[i].copy(), float(f[i]), viol[i].copy(),
                                      float(pen[i]), G[i].copy(), H[i].copy())


def run(problem, config: RunConfig, rng=None, initial_positions=None) -> RunResult:
    """Budgeted BMR/BWR optimisation of ``problem``.

    Each iteration updates every candidate once against roles (best, worst,
    mean) frozen at the start of the iteration, then refreshes the roles.
    Iterations continue while a full sweep still fits the evaluation budget.
    ``initial_positions`` bypasses random initialisation.
    """
    from .rng import RandomStream

    if rng is None:
        rng = RandomStream(config.seed)
    rule = ALGORITHMS[config.algorithm]
    n = config.population_size
    bounds = problem.bounds
    lower, upper = bounds.lower, bounds.upper

    if initial_positions is None:
        u = rng.uniforms(n * problem.dimension).reshape(n, problem.dimension)
        positions = lower + (upper - lower) * u
    else:
        positions = np.array(initial_positions, dtype=float)
        if positions.shape != (n, problem.dimension):
            raise ConfigError("initial positions do not match population size / dimension")
    f, G, H, pen, viol = _evaluate(problem, positions, config)
    pop = Population(positions, f, pen, viol, problem.sense, G, H)
    tracker = _Tracker(problem, config)
    tracker.update(0, positions, f, G, H, pen, viol)
    fe = n

    max_iter = (config.max_function_evaluations - n) // n
    iterations = np.arange(max_iter + 1)
    fe_counts = n * (iterations + 1)
    best_trace = np.empty(max_iter + 1)
    mean_trace = np.empty(max_iter + 1)
    best_trace[0] = pop.penalized[pop.best_index]
    mean_trace[0] = pop.penalized.mean()

    rows = np.arange(n)
    sign = 1.0 if problem.sense == MINIMIZE else -1.0
    constrained = pop.violations.shape[1] > 0
    backend = kernels.BACKEND
    for it in range(1, max_iter + 1):
        best, worst, mean = _role_vectors(pop)
        trials = kernels.trial_rows(pop.positions, best, worst, mean, lower, upper, rule,
                                    rng, rows, backend)
        f, G, H, pen, viol = _evaluate(problem, trials, config)
        if constrained or tracker.fe_to_success is None:
            tracker.update(fe, trials, f, G, H, pen, viol)
        fe += n
        better = sign * pen < sign * pop.penalized
        pop.replace(better, trials, f, pen, viol, G, H)
        pop.refresh()
        best_trace[it] = pop.penalized[pop.best_index]
        mean_trace[it] = pop.penalized.mean()

    best = pop.candidate(pop.best_index)
    if not constrained:
        # every candidate is feasible, so the feasible best is the population best
        tracker.best_row = best if np.isfinite(best.objective) else tracker.best_row
    return RunResult(best=best, fe_used=fe, fe_to_success=tracker.fe_to_success,
                     iterations=iterations, fe_counts=fe_counts, best_penalized=best_trace,
                     mean_penalized=mean_trace, best_feasible=tracker.best_row,
                     algorithm=config.algorithm, seed=config.seed, final_population=pop)
