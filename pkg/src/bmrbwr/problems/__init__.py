"""Problem catalog: unconstrained benchmarks and engineering design problems.

Scalable functions also resolve with a dimension suffix, e.g. ``sphere-50``
or ``rosenbrock-10``.
"""

from __future__ import annotations

from .base import (ConstraintSet, DimensionError, ProblemSpec, UnknownProblemError,
                   UNCONSTRAINED_BUDGET, default_budget, evaluate)
from .engineering import build_engineering
from .expr import Expression, ExpressionError, load_problem, parse_problem
from .unconstrained import SCALABLE, build_fixed, scaled

# Names kept free for the five functions of Yang (2023); no formulas shipped.
RESERVED = ("yang-complex-noisy", "yang-non-differentiable", "yang-hyperboloid",
            "yang-nonsmooth-multilayered", "yang-shortest-path")

_UNCONSTRAINED = tuple(build_fixed())
_ENGINEERING = tuple(build_engineering())
_REGISTRY = {p.name: p for p in _UNCONSTRAINED + _ENGINEERING}

SUITES = {
    "unconstrained-25": tuple(p.name for p in _UNCONSTRAINED),
    "engineering-12": tuple(p.name for p in _ENGINEERING),
}


def available() -> list[str]:
    return list(_REGISTRY)


def lookup(name: str) -> ProblemSpec:
    if name in _REGISTRY:
        return _REGISTRY[name]
    if name in RESERVED:
        raise UnknownProblemError(f"{name!r} is reserved but has no formulation in this catalog")
    base, _, suffix = name.rpartition("-")
    if base in SCALABLE and suffix.isdigit() and int(suffix) >= 2:
        return scaled(base, int(suffix), name)
    raise UnknownProblemError(
        f"unknown problem {name!r}; available: {', '.join(available())} "
        f"(scalable with -<D> suffix: {', '.join(SCALABLE)})")


def suite(name: str) -> list[ProblemSpec]:
    try:
        return [_REGISTRY[n] for n in SUITES[name]]
    except KeyError:
        raise UnknownProblemError(
            f"unknown suite {name!r}; available: {', '.join(SUITES)}") from None


__all__ = [
    "ConstraintSet", "DimensionError", "Expression", "ExpressionError", "ProblemSpec",
    "RESERVED", "SUITES", "UNCONSTRAINED_BUDGET", "UnknownProblemError", "available",
    "default_budget", "evaluate", "load_problem", "lookup", "parse_problem", "suite",
]
