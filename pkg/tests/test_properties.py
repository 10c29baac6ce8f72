"""Randomised invariants, 10,000 examples each."""

import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from bmrbwr import RandomStream, RunConfig, is_feasible, kernels, lookup, penalize, run, violations
from bmrbwr.penalty import penalty_term
from bmrbwr.problems import parse_problem

TRIALS = settings(max_examples=10_000, deadline=None, derandomize=True,
                  suppress_health_check=[HealthCheck.too_slow])

BUMP = parse_problem("name: bump\ndimension: 3\nlower: -2\nupper: 2\nsense: maximize\n"
                     "objective: cos(x1) * exp(-x2^2) - abs(x3)\n")
POOL = [lookup(n) for n in ("sphere-2", "rosenbrock-3", "ackley-4", "welded-beam",
                            "tension-compression-spring", "gear-train", "car-side-impact",
                            "pressure-vessel")] + [BUMP]

run_args = st.tuples(st.sampled_from(range(len(POOL))), st.integers(3, 6),
                     st.integers(0, 6), st.sampled_from(["bmr", "bwr"]),
                     st.integers(0, 2**63 - 1))


def _run(args):
    idx, n, iters, algo, seed = args
    prob = POOL[idx]
    cfg = RunConfig(population_size=n, max_function_evaluations=n * (1 + iters),
                    algorithm=algo, seed=seed)
    return prob, run(prob, cfg)


@TRIALS
@given(run_args)
def test_best_is_monotone(args):
    prob, res = _run(args)
    steps = np.diff(res.best_penalized)
    if prob.sense == "minimize":
        assert np.all(steps <= 0)
    else:
        assert np.all(steps >= 0)
    assert res.fe_used == args[1] * (1 + res.completed_iterations)


@TRIALS
@given(st.integers(2, 8), st.integers(1, 5), st.sampled_from([kernels.BMR, kernels.BWR]),
       st.integers(0, 2**32), st.floats(-1e3, 1e3), st.floats(1e-6, 1e3))
def test_trials_stay_in_bounds(n, m, rule, seed, low, width):
    gen = np.random.default_rng(seed)
    lower = low + gen.uniform(-1, 0, m) * width
    upper = lower + width * gen.uniform(0.01, 1, m)
    X = lower + (upper - lower) * gen.random((n, m))
    order = gen.permutation(n)
    out = kernels.trial_rows(X, X[order[0]], X[order[-1]], X.mean(0), lower, upper, rule,
                             RandomStream(seed), np.arange(n))
    assert np.all(out >= lower) and np.all(out <= upper)


@TRIALS
@given(run_args)
def test_population_stays_in_bounds(args):
    prob, res = _run(args)
    pos = res.final_population.positions
    assert np.all(pos >= prob.bounds.lower) and np.all(pos <= prob.bounds.upper)


magnitudes = st.floats(-1e6, 1e6, allow_nan=False).filter(lambda v: v == 0 or abs(v) > 1e-100)


@TRIALS
@given(st.floats(-1e9, 1e9), st.lists(magnitudes, max_size=5), st.lists(magnitudes, max_size=3),
       st.floats(0.1, 1e4))
def test_penalty_consistent_with_feasibility(f, g, h, w):
    report = violations(g, h, eps=0.0)
    feasible = is_feasible(report)
    assert feasible == (all(v <= 0 for v in g) and all(v == 0 for v in h))
    pen = penalize(f, g, h, weight=w)
    if feasible:
        assert pen == f and penalty_term(g, h) == 0
    else:
        assert penalty_term(g, h) > 0 and pen >= f
    assert penalize(f, g, h, weight=w, sense="maximize") <= f


@TRIALS
@given(run_args)
def test_same_seed_same_trace(args):
    _, a = _run(args)
    _, b = _run(args)
    assert np.array_equal(a.best_penalized, b.best_penalized)
    assert np.array_equal(a.mean_penalized, b.mean_penalized)
    assert np.array_equal(a.final_population.positions, b.final_population.positions)
