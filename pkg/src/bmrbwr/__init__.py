"""BMR and BWR population-based optimizers with a benchmark harness."""

from .harness import ExperimentSummary, compare, export, mfe, run_experiment, summarize
from .core import (Bounds, Candidate, ConfigError, IterationRecord, Population, RunConfig,
                   RunResult, bmr_trial, bwr_trial, clamp, greedy_select,
                   initialize_population, run)
from .penalty import ViolationReport, is_feasible, penalize, violations
from .problems import ProblemSpec, default_budget, evaluate, lookup
from .rng import RandomStream, ScriptedStream, StreamExhausted

__version__ = "0.1.0"

__all__ = [
    "Bounds", "Candidate", "ConfigError", "ExperimentSummary", "compare", "export", "mfe",
    "run_experiment", "summarize", "IterationRecord", "Population", "ProblemSpec",
    "RandomStream", "RunConfig", "RunResult", "ScriptedStream", "StreamExhausted",
    "ViolationReport", "bmr_trial", "bwr_trial", "clamp", "default_budget", "evaluate",
    "greedy_select", "initialize_population", "is_feasible", "lookup", "penalize", "run",
    "violations",
]
