"""Standard unconstrained benchmark functions, vectorised over rows.

Every function takes ``X`` with shape ``(n, m)`` and returns shape ``(n,)``.
Default dimensions and domains follow the widely used table of Karaboga &
Akay (2009), which is the usual source for this 25-function set.
"""

from __future__ import annotations

from functools import partial

import numpy as np

from ..core import Bounds
from .base import ProblemSpec

PI = np.pi


def sphere(X):
    return np.sum(X * X, axis=1)


def sumsquares(X):
    i = np.arange(1, X.shape[1] + 1)
    return np.sum(i * X * X, axis=1)


def beale(X):
    x1, x2 = X[:, 0], X[:, 1]
    return ((1.5 - x1 + x1 * x2) ** 2 + (2.25 - x1 + x1 * x2 ** 2) ** 2
            + (2.625 - x1 + x1 * x2 ** 3) ** 2)


def easom(X):
    x1, x2 = X[:, 0], X[:, 1]
    return -np.cos(x1) * np.cos(x2) * np.exp(-((x1 - PI) ** 2 + (x2 - PI) ** 2))


def matyas(X):
    x1, x2 = X[:, 0], X[:, 1]
    return 0.26 * (x1 ** 2 + x2 ** 2) - 0.48 * x1 * x2


def colville(X):
    x1, x2, x3, x4 = X.T
    return (100 * (x1 ** 2 - x2) ** 2 + (x1 - 1) ** 2 + (x3 - 1) ** 2
            + 90 * (x3 ** 2 - x4) ** 2
            + 10.1 * ((x2 - 1) ** 2 + (x4 - 1) ** 2) + 19.8 * (x2 - 1) * (x4 - 1))


def trid(X):
    return np.sum((X - 1) ** 2, axis=1) - np.sum(X[:, 1:] * X[:, :-1], axis=1)


def zakharov(X):
    i = np.arange(1, X.shape[1] + 1)
    s = np.sum(0.5 * i * X, axis=1)
    return np.sum(X * X, axis=1) + s ** 2 + s ** 4


def schwefel_1_2(X):
    return np.sum(np.cumsum(X, axis=1) ** 2, axis=1)


def rosenbrock(X):
    a, b = X[:, :-1], X[:, 1:]
    return np.sum(100.0 * (b - a * a) ** 2 + (a - 1.0) ** 2, axis=1)


def dixon_price(X):
    i = np.arange(2, X.shape[1] + 1)
    return (X[:, 0] - 1) ** 2 + np.sum(i * (2 * X[:, 1:] ** 2 - X[:, :-1]) ** 2, axis=1)


def branin(X):
    x1, x2 = X[:, 0], X[:, 1]
    return ((x2 - 5.1 / (4 * PI ** 2) * x1 ** 2 + 5 / PI * x1 - 6) ** 2
            + 10 * (1 - 1 / (8 * PI)) * np.cos(x1) + 10)


def bohachevsky1(X):
    x1, x2 = X[:, 0], X[:, 1]
    return x1 ** 2 + 2 * x2 ** 2 - 0.3 * np.cos(3 * PI * x1) - 0.4 * np.cos(4 * PI * x2) + 0.7


def bohachevsky2(X):
    x1, x2 = X[:, 0], X[:, 1]
    return x1 ** 2 + 2 * x2 ** 2 - 0.3 * np.cos(3 * PI * x1) * np.cos(4 * PI * x2) + 0.3


def bohachevsky3(X):
    x1, x2 = X[:, 0], X[:, 1]
    return x1 ** 2 + 2 * x2 ** 2 - 0.3 * np.cos(3 * PI * x1 + 4 * PI * x2) + 0.3


def booth(X):
    x1, x2 = X[:, 0], X[:, 1]
    return (x1 + 2 * x2 - 7) ** 2 + (2 * x1 + x2 - 5) ** 2


def michalewicz(X, steep=10):
    i = np.arange(1, X.shape[1] + 1)
    return -np.sum(np.sin(X) * np.sin(i * X * X / PI) ** (2 * steep), axis=1)


def goldstein_price(X):
    x1, x2 = X[:, 0], X[:, 1]
    a = 1 + (x1 + x2 + 1) ** 2 * (19 - 14 * x1 + 3 * x1 ** 2 - 14 * x2 + 6 * x1 * x2 + 3 * x2 ** 2)
    b = 30 + (2 * x1 - 3 * x2) ** 2 * (18 - 32 * x1 + 12 * x1 ** 2 + 48 * x2 - 36 * x1 * x2
                                       + 27 * x2 ** 2)
    return a * b


def perm(X, beta=0.5):
    m = X.shape[1]
    i = np.arange(1, m + 1, dtype=float)
    total = np.zeros(X.shape[0])
    for k in range(1, m + 1):
        inner = np.sum((i ** k + beta) * ((X / i) ** k - 1.0), axis=1)
        total += inner ** 2
    return total


def ackley(X):
    m = X.shape[1]
    a = -20.0 * np.exp(-0.2 * np.sqrt(np.sum(X * X, axis=1) / m))
    b = -np.exp(np.sum(np.cos(2 * PI * X), axis=1) / m)
    return a + b + 20.0 + np.e


_FOX_ROW = np.array([-32.0, -16.0, 0.0, 16.0, 32.0])
FOXHOLES_A = np.vstack((np.tile(_FOX_ROW, 5), np.repeat(_FOX_ROW, 5)))


def foxholes(X):
    diff = X[:, :, None] - FOXHOLES_A[None, :, :]  # (n, 2, 25)
    j = np.arange(1, 26)
    inner = j + np.sum(diff ** 6, axis=1)
    return 1.0 / (1.0 / 500.0 + np.sum(1.0 / inner, axis=1))


HARTMANN3_ALPHA = np.array([1.0, 1.2, 3.0, 3.2])
HARTMANN3_A = np.array([[3.0, 10.0, 30.0], [0.1, 10.0, 35.0],
                        [3.0, 10.0, 30.0], [0.1, 10.0, 35.0]])
HARTMANN3_P = 1e-4 * np.array([[3689, 1170, 2673], [4699, 4387, 7470],
                               [1091, 8732, 5547], [381, 5743, 8828]])


def hartmann3(X):
    inner = np.sum(HARTMANN3_A[None] * (X[:, None, :] - HARTMANN3_P[None]) ** 2, axis=2)
    return -np.sum(HARTMANN3_ALPHA * np.exp(-inner), axis=1)


def _u(X, a, k, m):
    return np.where(X > a, k * (X - a) ** m, np.where(X < -a, k * (-X - a) ** m, 0.0))


def penalized2(X):
    x1, xd = X[:, 0], X[:, -1]
    body = np.sum((X[:, :-1] - 1) ** 2 * (1 + np.sin(3 * PI * X[:, 1:]) ** 2), axis=1)
    core = np.sin(3 * PI * x1) ** 2 + body + (xd - 1) ** 2 * (1 + np.sin(2 * PI * xd) ** 2)
    return 0.1 * core + np.sum(_u(X, 5.0, 100.0, 4), axis=1)


def _trid_optimum(m):
    return -m * (m + 4) * (m - 1) / 6.0


def _trid_witness(m):
    i = np.arange(1, m + 1)
    return tuple(float(v) for v in i * (m + 1 - i))


_SFU = "Surjanovic & Bingham, Virtual Library of Simulation Experiments (sfu.ca/~ssurjano)"
_KA = "Karaboga & Akay (2009), Appl. Math. Comput. 214:108-132, benchmark table"


def _make(name, fn, m, low, high, known, note, witness=None):
    if np.isscalar(low):
        bounds = Bounds.uniform(low, high, m)
    else:
        bounds = Bounds(np.asarray(low, float), np.asarray(high, float))
    return ProblemSpec(name=name, dimension=m, bounds=bounds, objective=fn, known_best=known,
                       source_note=note, suite="unconstrained", witness=witness)


# Scalable entries: name -> builder(dimension, name)
def _sphere(m, name="sphere"):
    return _make(name, sphere, m, -100, 100, 0.0, f"Sphere; {_KA}", (0.0,) * m)


def _sumsquares(m, name="sumsquares"):
    return _make(name, sumsquares, m, -10, 10, 0.0, f"Sum Squares; {_KA}", (0.0,) * m)


def _trid(m, name=None):
    return _make(name or f"trid-{m}", trid, m, -m * m, m * m, _trid_optimum(m),
                 f"Trid; {_SFU}; optimum -m(m+4)(m-1)/6", _trid_witness(m))


def _zakharov(m, name="zakharov"):
    return _make(name, zakharov, m, -5, 10, 0.0, f"Zakharov; {_KA}", (0.0,) * m)


def _schwefel12(m, name="schwefel-1.2"):
    return _make(name, schwefel_1_2, m, -100, 100, 0.0,
                 f"Schwefel 1.2 (rotated hyper-ellipsoid); {_KA}", (0.0,) * m)


def _rosenbrock(m, name="rosenbrock"):
    return _make(name, rosenbrock, m, -30, 30, 0.0, f"Rosenbrock; {_KA}", (1.0,) * m)


def _dixon_price(m, name="dixon-price"):
    i = np.arange(1, m + 1)
    wit = tuple(float(v) for v in 2.0 ** (-(2.0 ** i - 2) / 2.0 ** i))
    return _make(name, dixon_price, m, -10, 10, 0.0,
                 f"Dixon-Price; {_KA}; optimum x_i = 2^-((2^i-2)/2^i)", wit)


def _michalewicz(m, name=None):
    known = {2: -1.8013, 5: -4.6877}.get(m)
    return _make(name or f"michalewicz-{m}", michalewicz, m, 0.0, PI, known,
                 f"Michalewicz (steepness 10); {_KA}")


def _perm(m, name="perm"):
    return _make(name, perm, m, -m, m, 0.0, f"Perm(D, beta=0.5); {_KA}",
                 tuple(float(i) for i in range(1, m + 1)))


def _ackley(m, name="ackley"):
    return _make(name, ackley, m, -32, 32, 0.0, f"Ackley; {_KA}", (0.0,) * m)


def _penalized2(m, name="penalized-2"):
    return _make(name, penalized2, m, -50, 50, 0.0,
                 f"Generalized penalized function 2 (Yao, Liu & Lin 1999); {_KA}", (1.0,) * m)


SCALABLE = {
    "sphere": (_sphere, 30),
    "sumsquares": (_sumsquares, 30),
    "trid": (_trid, 6),
    "zakharov": (_zakharov, 10),
    "schwefel-1.2": (_schwefel12, 30),
    "rosenbrock": (_rosenbrock, 30),
    "dixon-price": (_dixon_price, 30),
    "michalewicz": (_michalewicz, 2),
    "perm": (_perm, 4),
    "ackley": (_ackley, 30),
    "penalized-2": (_penalized2, 30),
}


def build_fixed():
    """The 25 entries of the standard unconstrained suite, in table order."""
    return [
        _sphere(30),
        _sumsquares(30),
        _make("beale", beale, 2, -4.5, 4.5, 0.0, f"Beale; {_KA}", (3.0, 0.5)),
        _make("easom", easom, 2, -100, 100, -1.0, f"Easom; {_KA}", (PI, PI)),
        _make("matyas", matyas, 2, -10, 10, 0.0, f"Matyas; {_KA}", (0.0, 0.0)),
        _make("colville", colville, 4, -10, 10, 0.0, f"Colville; {_KA}", (1.0,) * 4),
        _trid(6),
        _trid(10),
        _zakharov(10),
        _schwefel12(30),
        _rosenbrock(30),
        _dixon_price(30),
        _make("branin", branin, 2, [-5.0, 0.0], [10.0, 15.0], 0.397887,
              f"Branin; {_KA}", (PI, 2.275)),
        _make("bohachevsky-1", bohachevsky1, 2, -100, 100, 0.0, f"Bohachevsky 1; {_KA}", (0.0, 0.0)),
        _make("bohachevsky-2", bohachevsky2, 2, -100, 100, 0.0, f"Bohachevsky 2; {_KA}", (0.0, 0.0)),
        _make("bohachevsky-3", bohachevsky3, 2, -100, 100, 0.0, f"Bohachevsky 3; {_KA}", (0.0, 0.0)),
        _make("booth", booth, 2, -10, 10, 0.0, f"Booth; {_KA}", (1.0, 3.0)),
        _michalewicz(2),
        _michalewicz(5),
        _make("goldstein-price", goldstein_price, 2, -2, 2, 3.0, f"Goldstein-Price; {_KA}",
              (0.0, -1.0)),
        _perm(4),
        _ackley(30),
        _make("foxholes", foxholes, 2, -65.536, 65.536, 0.998004,
              f"Shekel's foxholes (De Jong F5); {_KA}", (-32.0, -32.0)),
        _make("hartmann-3", hartmann3, 3, 0.0, 1.0, -3.86278, f"Hartmann 3-D; {_SFU}"),
        _penalized2(30),
    ]


def scaled(base: str, m: int, name: str):
    builder, _ = SCALABLE[base]
    return builder(m, name=name)
