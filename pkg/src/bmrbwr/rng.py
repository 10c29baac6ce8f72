"""Uniform random sources consumed by the optimizers.

Both stream types expose the same buffer protocol so the compiled kernels can
read uniforms straight out of a numpy array:

    buf, pos = stream.reserve(k)   # at least k values after pos, if available
    ...kernel reads buf[pos:end]...
    stream.advance_to(end)

Reading through the buffer yields exactly the same sequence as repeated
``next_uniform()`` calls.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

_MASK64 = (1 << 64) - 1
_CHUNK = 4096


class StreamExhausted(RuntimeError):
    """A scripted stream ran out of values."""


class RandomStream:
    """Seeded source of uniforms in [0, 1), backed by PCG64."""

    def __init__(self, seed: int):
        self.seed = int(seed)
        self._gen = np.random.Generator(np.random.PCG64(self.seed & _MASK64))
        self._buf = np.empty(0)
        self._pos = 0

    def reserve(self, count: int) -> tuple[np.ndarray, int]:
        remaining = self._buf.shape[0] - self._pos
        if remaining < count:
            fresh = self._gen.random(max(count - remaining, _CHUNK))
            self._buf = np.concatenate((self._buf[self._pos:], fresh))
            self._pos = 0
        return self._buf, self._pos

    def advance_to(self, pos: int) -> None:
        if pos < self._pos or pos > self._buf.shape[0]:
            raise ValueError(f"cannot advance stream to {pos}")
        self._pos = pos

    def next_uniform(self) -> float:
        buf, pos = self.reserve(1)
        self._pos = pos + 1
        return float(buf[pos])

    def uniforms(self, count: int) -> np.ndarray:
        buf, pos = self.reserve(count)
        self._pos = pos + count
        return buf[pos:pos + count].copy()


class ScriptedStream:
    """Replays a fixed sequence of uniforms; raises once it is used up.

    Intended for regression traces where every random number is dictated by
    the caller (see :func:`choice_uniform` for encoding discrete picks).
    """

    def __init__(self, values: Iterable[float]):
        self._buf = np.asarray(list(values), dtype=float)
        if np.any((self._buf < 0.0) | (self._buf >= 1.0)):
            raise ValueError("scripted values must lie in [0, 1)")
        self._pos = 0
        self.seed = 0

    @property
    def remaining(self) -> int:
        return self._buf.shape[0] - self._pos

    def reserve(self, count: int) -> tuple[np.ndarray, int]:
        return self._buf, self._pos

    def advance_to(self, pos: int) -> None:
        if pos < self._pos or pos > self._buf.shape[0]:
            raise ValueError(f"cannot advance stream to {pos}")
        self._pos = pos

    def next_uniform(self) -> float:
        if self._pos >= self._buf.shape[0]:
            raise StreamExhausted(f"scripted stream exhausted after {self._pos} values")
        self._pos += 1
        return float(self._buf[self._pos - 1])

    def uniforms(self, count: int) -> np.ndarray:
        if self.remaining < count:
            raise StreamExhausted(
                f"requested {count} values, {self.remaining} left in scripted stream")
        out = self._buf[self._pos:self._pos + count].copy()
        self._pos += count
        return out


def choice_uniform(index: int, n_choices: int) -> float:
    """Uniform value that maps to ``index`` under ``int(u * n_choices)``."""
    if not 0 <= index < n_choices:
        raise ValueError(f"index {index} outside 0..{n_choices - 1}")
    return (index + 0.5) / n_choices


def partner_uniform(k: int, partner: int, n: int) -> float:
    """Uniform value selecting ``partner`` as the random peer of candidate ``k``.

    Peers are drawn from the ``n - 1`` indices other than ``k``.
    """
    if partner == k:
        raise ValueError("a candidate cannot be its own partner")
    slot = partner if partner < k else partner - 1
    return choice_uniform(slot, n - 1)


def factor_uniform(t: int) -> float:
    """Uniform value producing the factor ``t`` in {1, 2}."""
    return choice_uniform(t - 1, 2)
