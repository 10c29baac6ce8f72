"""Static quadratic penalty and feasibility metrics.

The penalty uses raw constraint values (``max(0, g)**2`` and ``h**2``); the
metrics (per-constraint violation, mean violation, feasibility) apply an
equality tolerance ``eps`` to ``|h|``. The two are deliberately separate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

MINIMIZE = "minimize"
MAXIMIZE = "maximize"
SENSES = (MINIMIZE, MAXIMIZE)

DEFAULT_WEIGHT = 10.0
DEFAULT_EQ_TOL = 1e-4


class EvaluationError(ValueError):
    """Raised when an objective or constraint value is not finite."""


def check_sense(sense: str) -> str:
    if sense not in SENSES:
        raise ValueError(f"sense must be one of {SENSES}, got {sense!r}")
    return sense


@dataclass(frozen=True)
class ViolationReport:
    per_constraint: np.ndarray
    mean_violation: float


def _as_vec(values) -> np.ndarray:
    return np.atleast_1d(np.asarray(values, dtype=float)).ravel()


def penalty_term(g_values, h_values) -> float:
    g = _as_vec(g_values)
    h = _as_vec(h_values)
    return float(np.sum(np.maximum(g, 0.0) ** 2) + np.sum(h ** 2))


def penalize(objective: float, g_values=(), h_values=(), weight: float = DEFAULT_WEIGHT,
             sense: str = MINIMIZE) -> float:
    """Penalized objective: ``f + w * (sum max(0, g)^2 + sum h^2)``.

    For maximization the penalty is subtracted instead. Feasible points are
    returned unchanged.
    """
    check_sense(sense)
    if not weight > 0:
        raise ValueError(f"penalty weight must be positive, got {weight}")
    g = _as_vec(g_values)
    h = _as_vec(h_values)
    if not (math.isfinite(objective) and np.all(np.isfinite(g)) and np.all(np.isfinite(h))):
        raise EvaluationError("non-finite objective or constraint value")
    term = penalty_term(g, h)
    if term == 0.0:
        return float(objective)
    if sense == MINIMIZE:
        return float(objective) + weight * term
    return float(objective) - weight * term


def violations(g_values=(), h_values=(), eps: float = DEFAULT_EQ_TOL) -> ViolationReport:
    if eps < 0:
        raise ValueError("equality tolerance must be non-negative")
    g = _as_vec(g_values)
    h = _as_vec(h_values)
    per = np.concatenate((np.maximum(g, 0.0), np.maximum(np.abs(h) - eps, 0.0)))
    mean = float(per.mean()) if per.size else 0.0
    return ViolationReport(per, mean)


def is_feasible(report: ViolationReport) -> bool:
    return bool(np.all(report.per_constraint == 0.0))


# Batched versions used by the run loop: rows are candidates.

def penalize_batch(objective: np.ndarray, g: np.ndarray | None, h: np.ndarray | None,
                   weight: float, sense: str) -> np.ndarray:
    """Row-wise :func:`penalize`; non-finite rows map to the worst possible value."""
    term = np.zeros_like(objective)
    if g is not None and g.shape[1]:
        term += np.sum(np.maximum(g, 0.0) ** 2, axis=1)
    if h is not None and h.shape[1]:
        term += np.sum(h ** 2, axis=1)
    if sense == MINIMIZE:
        out = objective + weight * term
        bad = np.inf
    else:
        out = objective - weight * term
        bad = -np.inf
    out = np.where(term == 0.0, objective, out)
    return np.where(np.isfinite(out), out, bad)


def violation_batch(g: np.ndarray | None, h: np.ndarray | None, eps: float) -> np.ndarray:
    parts = []
    if g is not None and g.shape[1]:
        parts.append(np.maximum(g, 0.0))
    if h is not None and h.shape[1]:
        parts.append(np.maximum(np.abs(h) - eps, 0.0))
    if not parts:
        rows = g.shape[0] if g is not None else (h.shape[0] if h is not None else 0)
        return np.zeros((rows, 0))
    per = np.concatenate(parts, axis=1)
    # NaN constraint values count as violated
    return np.where(np.isnan(per), np.inf, per)
