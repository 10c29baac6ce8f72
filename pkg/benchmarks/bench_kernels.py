"""Time the numba and numpy trial kernels, alone and inside full runs.

    python benchmarks/bench_kernels.py [--repeat 5] [--budget 100000]

Both backends consume the same random stream, so the script also checks
that they produce identical trial matrices and run traces.
"""

import argparse
import time

import numpy as np

from bmrbwr import RandomStream, RunConfig, kernels, lookup, run
from bmrbwr._accel import HAS_NUMBA


def _kernel_call(backend, n, m, rule, seed):
    rng = np.random.default_rng(seed)
    pos = rng.uniform(-100, 100, (n, m))
    lower, upper = np.full(m, -100.0), np.full(m, 100.0)
    best, worst, mean = pos[0], pos[-1], pos.mean(0)
    stream = RandomStream(seed)
    return kernels.trial_rows(pos, best, worst, mean, lower, upper, rule, stream,
                              np.arange(n), backend)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--budget", type=int, default=100_000)
    args = ap.parse_args()
    backends = ["numpy"] + (["numba"] if HAS_NUMBA else [])

    print("kernel: 1000 sweeps of trial_rows")
    for n, m in [(20, 2), (20, 30), (50, 100)]:
        ref = {b: _kernel_call(b, n, m, kernels.BWR, 1) for b in backends}  # warm-up / JIT
        if len(ref) == 2:
            assert np.array_equal(ref["numpy"], ref["numba"]), "backends disagree"
        row = []
        for b in backends:
            t = best_of(lambda: [_kernel_call(b, n, m, kernels.BWR, s) for s in range(1000)],
                        args.repeat)
            row.append(f"{b} {t * 1e3:8.1f} ms")
        print(f"  n={n:<3} m={m:<4}" + "   ".join(row))

    print(f"full run: budget {args.budget}, population 20")
    saved = kernels.BACKEND
    try:
        for name in ["sphere-30", "schwefel-1.2", "welded-beam"]:
            problem = lookup(name)
            cfg = RunConfig(max_function_evaluations=args.budget, algorithm="bwr", seed=3)
            traces, row = {}, []
            for b in backends:
                kernels.BACKEND = b
                traces[b] = run(problem, cfg, RandomStream(3)).best_penalized
                t = best_of(lambda: run(problem, cfg, RandomStream(3)), max(1, args.repeat // 2))
                row.append(f"{b} {t:6.2f} s")
            same = len(traces) < 2 or np.array_equal(traces["numpy"], traces["numba"])
            print(f"  {name:<14}" + "   ".join(row) + f"   identical={same}")
    finally:
        kernels.BACKEND = saved


if __name__ == "__main__":
    main()
