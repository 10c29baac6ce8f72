from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from ..core import Bounds
from ..penalty import MINIMIZE, check_sense

BatchFn = Callable[[np.ndarray], np.ndarray]


class UnknownProblemError(KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown problem"


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class ConstraintSet:
    """Inequalities ``g_i(x) <= 0`` and equalities ``h_j(x) = 0``.

    Each entry maps a batch ``X`` of shape ``(n, m)`` to either ``(n,)`` (one
    constraint) or ``(n, k)`` (a block of ``k`` constraints).
    ``n_inequalities``/``n_equalities`` give the total column counts.
    """

    inequalities: Sequence[BatchFn] = ()
    equalities: Sequence[BatchFn] = ()
    n_inequalities: int = 0
    n_equalities: int = 0

    @property
    def count(self) -> int:
        return self.n_inequalities + self.n_equalities

    @staticmethod
    def _stack(fns, X, expected):
        n = X.shape[0]
        if not fns:
            return np.zeros((n, 0))
        cols = [np.asarray(fn(X), dtype=float).reshape(n, -1) for fn in fns]
        out = np.concatenate(cols, axis=1) if len(cols) > 1 else cols[0]
        if out.shape[1] != expected:
            raise ValueError(f"constraint block produced {out.shape[1]} columns, expected {expected}")
        return out

    def evaluate(self, X):
        return (self._stack(self.inequalities, X, self.n_inequalities),
                self._stack(self.equalities, X, self.n_equalities))


@dataclass(frozen=True)
class ProblemSpec:
    name: str
    dimension: int
    bounds: Bounds
    objective: BatchFn
    constraints: ConstraintSet = field(default_factory=ConstraintSet)
    sense: str = MINIMIZE
    known_best: Optional[float] = None
    source_note: str = ""
    suite: str = "unconstrained"
    witness: Optional[tuple] = None

    def __post_init__(self):
        check_sense(self.sense)
        if self.dimension < 1:
            raise ValueError("dimension must be >= 1")
        if self.bounds.dimension != self.dimension:
            raise ValueError(f"{self.name}: bounds have {self.bounds.dimension} entries, "
                             f"dimension is {self.dimension}")

    @property
    def constrained(self) -> bool:
        return self.constraints.count > 0

    def evaluate_batch(self, X):
        X = np.asarray(X, dtype=float)
        if X.ndim != 2 or X.shape[1] != self.dimension:
            raise DimensionError(f"{self.name} expects points of length {self.dimension}, "
                                 f"got array of shape {X.shape}")
        f = np.asarray(self.objective(X), dtype=float).reshape(X.shape[0])
        G, H = self.constraints.evaluate(X)
        return f, G, H


def evaluate(problem: ProblemSpec, x):
    """Objective, inequality values and equality values at a single point."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.shape[0] != problem.dimension:
        raise DimensionError(f"{problem.name} expects a vector of length {problem.dimension}, "
                             f"got shape {x.shape}")
    f, G, H = problem.evaluate_batch(x[None, :])
    return float(f[0]), G[0], H[0]


UNCONSTRAINED_BUDGET = 500_000


def default_budget(problem: ProblemSpec) -> int:
    """Evaluation budget: 500k for the unconstrained suite, else by dimension.

    Constrained problems get 1e5 evaluations up to 10 variables and 2e5 above.
    """
    if problem.suite == "unconstrained":
        return UNCONSTRAINED_BUDGET
    return 100_000 if problem.dimension <= 10 else 200_000
