"""Trial-vector kernels for the best-mean-random and best-worst-random rules.

Two interchangeable backends compute identical results:

* ``_trial_rows_nb`` -- scalar loop compiled with numba.
* ``_trial_rows_np`` -- vectorised numpy; the only sequential part is a walk
  over candidate start offsets.

Draw order (per candidate, in row order): partner slot, factor T, r4, then
for each variable ascending either (r1, r2) when r4 > 0.5, or r3 otherwise.
The branch is chosen once per candidate; r1, r2 and r3 are per variable.
"""

from __future__ import annotations

import numpy as np

from ._accel import USE_NUMBA, njit
from .rng import StreamExhausted

BMR = 0
BWR = 1

BACKEND = "numba" if USE_NUMBA else "numpy"


def draws_upper_bound(n_rows: int, m: int) -> int:
    return n_rows * (3 + 2 * m)


@njit(cache=True)
def _trial_rows_nb(pos, best, worst, mean, lower, upper, rule, u, start, rows, out):
    n, m = pos.shape
    size = u.shape[0]
    c = start
    for idx in range(rows.shape[0]):
        k = rows[idx]
        if c + 3 > size:
            return -1
        slot = int(u[c] * (n - 1))
        if slot > n - 2:
            slot = n - 2
        p = slot + 1 if slot >= k else slot
        t = 2.0 if u[c + 1] >= 0.5 else 1.0
        exploit = u[c + 2] > 0.5
        c += 3
        if exploit:
            if c + 2 * m > size:
                return -1
            for j in range(m):
                r1 = u[c]
                r2 = u[c + 1]
                c += 2
                if rule == 1:
                    v = pos[k, j] + r1 * (best[j] - t * pos[p, j]) - r2 * (worst[j] - pos[p, j])
                else:
                    v = pos[k, j] + r1 * (best[j] - t * mean[j]) + r2 * (best[j] - pos[p, j])
                if v < lower[j]:
                    v = lower[j]
                elif v > upper[j]:
                    v = upper[j]
                out[idx, j] = v
        else:
            if c + m > size:
                return -1
            for j in range(m):
                out[idx, j] = upper[j] - (upper[j] - lower[j]) * u[c]
                c += 1
    return c


def _trial_rows_np(pos, best, worst, mean, lower, upper, rule, u, start, rows, out):
    n, m = pos.shape
    n_rows = rows.shape[0]
    size = u.shape[0]

    starts = np.empty(n_rows, dtype=np.int64)
    exploit = np.empty(n_rows, dtype=bool)
    c = start
    for idx in range(n_rows):
        if c + 3 > size:
            raise StreamExhausted("stream ran out while drawing partner/factor/branch")
        starts[idx] = c
        exploit[idx] = u[c + 2] > 0.5
        c += 3 + (2 * m if exploit[idx] else m)
        if c > size:
            raise StreamExhausted("stream ran out while drawing variable updates")

    slot = (u[starts] * (n - 1)).astype(np.int64)
    np.minimum(slot, n - 2, out=slot)
    partner = slot + (slot >= rows)
    t = np.where(u[starts + 1] >= 0.5, 2.0, 1.0)[:, None]

    j = np.arange(m)
    ex = np.flatnonzero(exploit)
    if ex.size:
        base = starts[ex, None] + 3 + 2 * j
        r1, r2 = u[base], u[base + 1]
        own, peer = pos[rows[ex]], pos[partner[ex]]
        if rule == BWR:
            moved = own + r1 * (best - t[ex] * peer) - r2 * (worst - peer)
        else:
            moved = own + r1 * (best - t[ex] * mean) + r2 * (best - peer)
        out[ex] = np.minimum(upper, np.maximum(lower, moved))
    re = np.flatnonzero(~exploit)
    if re.size:
        r3 = u[starts[re, None] + 3 + j]
        out[re] = upper - (upper - lower) * r3
    return c


def trial_rows(pos, best, worst, mean, lower, upper, rule, stream, rows, backend=None):
    """Trial vectors for ``rows`` of ``pos``, consuming uniforms from ``stream``.

    ``best``/``worst`` are the role positions, ``mean`` the per-variable mean.
    Returns an array of shape ``(len(rows), m)``, already clamped to bounds.
    """
    n, m = pos.shape
    if n < 2:
        raise ValueError("trial generation needs at least two candidates")
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    out = np.empty((rows.shape[0], m))
    buf, start = stream.reserve(draws_upper_bound(rows.shape[0], m))
    backend = backend or BACKEND
    if backend == "numba":
        end = _trial_rows_nb(pos, best, worst, mean, lower, upper, rule, buf, start, rows, out)
        if end < 0:
            raise StreamExhausted("random stream exhausted during trial generation")
    elif backend == "numpy":
        end = _trial_rows_np(pos, best, worst, mean, lower, upper, rule, buf, start, rows, out)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    stream.advance_to(end)
    return out
