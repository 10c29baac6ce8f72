"""Classical constrained engineering design problems.

Constraint blocks return ``(n, q)`` arrays with the convention ``g <= 0``.
Formulations follow the common literature versions (see each ``source_note``);
all variables are treated as continuous.
"""

from __future__ import annotations

import numpy as np

from ..core import Bounds
from .base import ConstraintSet, ProblemSpec


def _spec(name, fn, cons, q, low, high, known, note, witness=None):
    bounds = Bounds(np.asarray(low, float), np.asarray(high, float))
    return ProblemSpec(name=name, dimension=bounds.dimension, bounds=bounds, objective=fn,
                       constraints=ConstraintSet((cons,), (), q, 0), known_best=known,
                       source_note=note, suite="engineering", witness=witness)


# -- welded beam -------------------------------------------------------------
WB_P, WB_L, WB_E, WB_G = 6000.0, 14.0, 30e6, 12e6
WB_TAU_MAX, WB_SIGMA_MAX, WB_DELTA_MAX = 13600.0, 30000.0, 0.25


def welded_beam(X):
    h, l, t, b = X.T
    return 1.10471 * h ** 2 * l + 0.04811 * t * b * (14.0 + l)


def welded_beam_g(X):
    h, l, t, b = X.T
    tau1 = WB_P / (np.sqrt(2.0) * h * l)
    m = WB_P * (WB_L + l / 2.0)
    r = np.sqrt(l ** 2 / 4.0 + ((h + t) / 2.0) ** 2)
    j = 2.0 * (np.sqrt(2.0) * h * l * (l ** 2 / 12.0 + ((h + t) / 2.0) ** 2))
    tau2 = m * r / j
    tau = np.sqrt(tau1 ** 2 + 2.0 * tau1 * tau2 * l / (2.0 * r) + tau2 ** 2)
    sigma = 6.0 * WB_P * WB_L / (b * t ** 2)
    delta = 4.0 * WB_P * WB_L ** 3 / (WB_E * t ** 3 * b)
    pc = (4.013 * WB_E * np.sqrt(t ** 2 * b ** 6 / 36.0) / WB_L ** 2
          * (1.0 - t / (2.0 * WB_L) * np.sqrt(WB_E / (4.0 * WB_G))))
    return np.column_stack((
        tau - WB_TAU_MAX,
        sigma - WB_SIGMA_MAX,
        delta - WB_DELTA_MAX,
        h - b,
        WB_P - pc,
        0.125 - h,
        1.10471 * h ** 2 + 0.04811 * t * b * (14.0 + l) - 5.0,
    ))


# -- three-bar truss -----------------------------------------------------------
TB_L, TB_P, TB_SIGMA = 100.0, 2.0, 2.0


def three_bar_truss(X):
    x1, x2 = X.T
    return (2.0 * np.sqrt(2.0) * x1 + x2) * TB_L


def three_bar_truss_g(X):
    x1, x2 = X.T
    s2 = np.sqrt(2.0)
    den = s2 * x1 ** 2 + 2.0 * x1 * x2
    return np.column_stack((
        (s2 * x1 + x2) / den * TB_P - TB_SIGMA,
        x2 / den * TB_P - TB_SIGMA,
        1.0 / (s2 * x2 + x1) * TB_P - TB_SIGMA,
    ))


# -- cantilever beam -----------------------------------------------------------
def cantilever_beam(X):
    return 0.0624 * np.sum(X, axis=1)


def cantilever_beam_g(X):
    c = np.array([61.0, 37.0, 19.0, 7.0, 1.0])
    return (np.sum(c / X ** 3, axis=1) - 1.0)[:, None]


# -- gear train ------------------------------------------------------------------
def gear_train(X):
    ta, tb, td, tf = X.T
    return (1.0 / 6.931 - tb * td / (ta * tf)) ** 2


def no_constraints(X):
    return np.zeros((X.shape[0], 0))


# -- tension/compression spring ----------------------------------------------------
def spring(X):
    d, D, N = X.T
    return (N + 2.0) * D * d ** 2


def spring_g(X):
    d, D, N = X.T
    return np.column_stack((
        1.0 - D ** 3 * N / (71785.0 * d ** 4),
        (4.0 * D ** 2 - d * D) / (12566.0 * (D * d ** 3 - d ** 4)) + 1.0 / (5108.0 * d ** 2) - 1.0,
        1.0 - 140.45 * d / (D ** 2 * N),
        (d + D) / 1.5 - 1.0,
    ))


# -- pressure vessel ---------------------------------------------------------------
def pressure_vessel(X):
    ts, th, r, l = X.T
    return (0.6224 * ts * r * l + 1.7781 * th * r ** 2 + 3.1661 * ts ** 2 * l
            + 19.84 * ts ** 2 * r)


def pressure_vessel_g(X):
    ts, th, r, l = X.T
    return np.column_stack((
        -ts + 0.0193 * r,
        -th + 0.00954 * r,
        -np.pi * r ** 2 * l - 4.0 / 3.0 * np.pi * r ** 3 + 1296000.0,
        l - 240.0,
    ))


# -- speed reducer -------------------------------------------------------------------
def speed_reducer(X):
    x1, x2, x3, x4, x5, x6, x7 = X.T
    return (0.7854 * x1 * x2 ** 2 * (3.3333 * x3 ** 2 + 14.9334 * x3 - 43.0934)
            - 1.508 * x1 * (x6 ** 2 + x7 ** 2) + 7.4777 * (x6 ** 3 + x7 ** 3)
            + 0.7854 * (x4 * x6 ** 2 + x5 * x7 ** 2))


def speed_reducer_g(X):
    x1, x2, x3, x4, x5, x6, x7 = X.T
    return np.column_stack((
        27.0 / (x1 * x2 ** 2 * x3) - 1.0,
        397.5 / (x1 * x2 ** 2 * x3 ** 2) - 1.0,
        1.93 * x4 ** 3 / (x2 * x6 ** 4 * x3) - 1.0,
        1.93 * x5 ** 3 / (x2 * x7 ** 4 * x3) - 1.0,
        np.sqrt((745.0 * x4 / (x2 * x3)) ** 2 + 16.9e6) / (110.0 * x6 ** 3) - 1.0,
        np.sqrt((745.0 * x5 / (x2 * x3)) ** 2 + 157.5e6) / (85.0 * x7 ** 3) - 1.0,
        x2 * x3 / 40.0 - 1.0,
        5.0 * x2 / x1 - 1.0,
        x1 / (12.0 * x2) - 1.0,
        (1.5 * x6 + 1.9) / x4 - 1.0,
        (1.1 * x7 + 1.9) / x5 - 1.0,
    ))


# -- I-beam vertical deflection -------------------------------------------------------
def i_beam(X):
    h, b, tw, tf = X.T
    inertia = (tw * (h - 2.0 * tf) ** 3 / 12.0 + b * tf ** 3 / 6.0
               + 2.0 * b * tf * ((h - tf) / 2.0) ** 2)
    return 5000.0 / inertia


def i_beam_g(X):
    h, b, tw, tf = X.T
    web = h - 2.0 * tf
    stress = (18.0 * h * 1e4 / (tw * web ** 3 + 2.0 * b * tf * (4.0 * tf ** 2 + 3.0 * h * web))
              + 15.0 * b * 1e3 / (web * tw ** 3 + 2.0 * tf * b ** 3))
    return np.column_stack((
        2.0 * b * tf + tw * web - 300.0,
        stress - 56.0,
    ))


# -- tubular column --------------------------------------------------------------------
TC_P, TC_SIGMA_Y, TC_E, TC_L = 2500.0, 500.0, 0.85e6, 250.0


def tubular_column(X):
    d, t = X.T
    return 9.8 * d * t + 2.0 * d


def tubular_column_g(X):
    d, t = X.T
    return np.column_stack((
        TC_P / (np.pi * d * t * TC_SIGMA_Y) - 1.0,
        8.0 * TC_P * TC_L ** 2 / (np.pi ** 3 * TC_E * d * t * (d ** 2 + t ** 2)) - 1.0,
        2.0 / d - 1.0,
        d / 14.0 - 1.0,
        0.2 / t - 1.0,
        t / 0.8 - 1.0,
    ))


# -- piston lever ------------------------------------------------------------------------
PL_Q, PL_L, PL_M, PL_P = 10000.0, 240.0, 1.8e6, 1500.0
PL_THETA = np.pi / 4.0


def _lever_arms(H, B, xl):
    s, c = np.sin(PL_THETA), np.cos(PL_THETA)
    l1 = np.sqrt((xl - B) ** 2 + H ** 2)
    l2 = np.sqrt((xl * s + H) ** 2 + (B - xl * c) ** 2)
    return l1, l2


def piston_lever(X):
    H, B, D, xl = X.T
    l1, l2 = _lever_arms(H, B, xl)
    return 0.25 * np.pi * D ** 2 * (l2 - l1)


def piston_lever_g(X):
    H, B, D, xl = X.T
    s, c = np.sin(PL_THETA), np.cos(PL_THETA)
    l1, l2 = _lever_arms(H, B, xl)
    r = np.abs(-xl * (xl * s + H) + H * (B - xl * c)) / l1
    force = np.pi * PL_P * D ** 2 / 4.0
    return np.column_stack((
        PL_Q * PL_L * c - r * force,
        PL_Q * (PL_L - xl) - PL_M,
        1.2 * (l2 - l1) - l1,
        D / 2.0 - B,
    ))


# -- corrugated bulkhead ---------------------------------------------------------------------
def corrugated_bulkhead(X):
    b, h, l, t = X.T
    return 5.885 * t * (b + l) / (b + np.sqrt(np.abs(l ** 2 - h ** 2)))


def corrugated_bulkhead_g(X):
    b, h, l, t = X.T
    span = b + np.sqrt(np.abs(l ** 2 - h ** 2))
    return np.column_stack((
        -t * h * (0.4 * b + l / 6.0) + 8.94 * span,
        -t * h ** 2 * (0.2 * b + l / 12.0) + 2.2 * (8.94 * span) ** (4.0 / 3.0),
        -t + 0.0156 * b + 0.15,
        -t + 0.0156 * l + 0.15,
        -t + 1.05,
        -l + h,
    ))


# -- car side impact ---------------------------------------------------------------------------
def car_side_impact(X):
    x = X.T
    return (1.98 + 4.90 * x[0] + 6.67 * x[1] + 6.98 * x[2] + 4.01 * x[3] + 1.78 * x[4]
            + 2.73 * x[6])


def car_side_impact_g(X):
    x1, x2, x3, x4, x5, x6, x7, x8, x9, x10, x11 = X.T
    return np.column_stack((
        1.16 - 0.3717 * x2 * x4 - 0.00931 * x2 * x10 - 0.484 * x3 * x9 + 0.01343 * x6 * x10 - 1.0,
        (0.261 - 0.0159 * x1 * x2 - 0.188 * x1 * x8 - 0.019 * x2 * x7 + 0.0144 * x3 * x5
         + 0.0008757 * x5 * x10 + 0.08045 * x6 * x9 + 0.00139 * x8 * x11
         + 0.00001575 * x10 * x11 - 0.32),
        (0.214 + 0.00817 * x5 - 0.131 * x1 * x8 - 0.0704 * x1 * x9 + 0.03099 * x2 * x6
         - 0.018 * x2 * x7 + 0.0208 * x3 * x8 + 0.121 * x3 * x9 - 0.00364 * x5 * x6
         + 0.0007715 * x5 * x10 - 0.0005354 * x6 * x10 + 0.00121 * x8 * x11 - 0.32),
        0.074 - 0.061 * x2 - 0.163 * x3 * x8 + 0.001232 * x3 * x10 - 0.166 * x7 * x9
        + 0.227 * x2 ** 2 - 0.32,
        28.98 + 3.818 * x3 - 4.2 * x1 * x2 + 0.0207 * x5 * x10 + 6.63 * x6 * x9
        - 7.7 * x7 * x8 + 0.32 * x9 * x10 - 32.0,
        33.86 + 2.95 * x3 + 0.1792 * x10 - 5.057 * x1 * x2 - 11.0 * x2 * x8
        - 0.0215 * x5 * x10 - 9.98 * x7 * x8 + 22.0 * x8 * x9 - 32.0,
        46.36 - 9.9 * x2 - 12.9 * x1 * x8 + 0.1107 * x3 * x10 - 32.0,
        4.72 - 0.5 * x4 - 0.19 * x2 * x3 - 0.0122 * x4 * x10 + 0.009325 * x6 * x10
        + 0.000191 * x11 ** 2 - 4.0,
        10.58 - 0.674 * x1 * x2 - 1.95 * x2 * x8 + 0.02054 * x3 * x10 - 0.0198 * x4 * x10
        + 0.028 * x6 * x10 - 9.9,
        16.45 - 0.489 * x3 * x7 - 0.843 * x5 * x6 + 0.0432 * x9 * x10 - 0.0556 * x9 * x11
        - 0.000786 * x11 ** 2 - 15.7,
    ))


def build_engineering():
    """Twelve engineering problems, in table order. Known optima are for the
    continuous formulations implemented here."""
    return [
        _spec("welded-beam", welded_beam, welded_beam_g, 7,
              [0.1, 0.1, 0.1, 0.1], [2.0, 10.0, 10.0, 2.0], 1.724852308597366,
              "Welded beam, Coello (2000) / Ragsdell & Phillips (1976); x = (h, l, t, b)",
              witness=(0.2057296387860847, 3.470488687150605, 9.036623910357605, 0.20572963978608103)),
        _spec("three-bar-truss", three_bar_truss, three_bar_truss_g, 3,
              [0.0, 0.0], [1.0, 1.0], 263.8958433765,
              "Three-bar truss, Ray & Saini (2001); l=100, P=2, sigma=2",
              witness=(0.7886753145109826, 0.40824778192451977)),
        _spec("cantilever-beam", cantilever_beam, cantilever_beam_g, 1,
              [0.01] * 5, [100.0] * 5, 1.339956360586615,
              "Cantilever beam, Chickermane & Gea (1996)",
              witness=(6.016015912446713, 5.309173858474611, 4.494329558144881, 3.5014749889311396, 2.152665311898315)),
        _spec("gear-train", gear_train, no_constraints, 0,
              [12.0] * 4, [60.0] * 4, 0.0,
              "Gear train, Sandgren (1990); teeth counts relaxed to reals in [12, 60]; "
              "integer optimum 2.700857e-12 at (43, 16, 19, 49)",
              witness=(43.0, 16.0, 19.0, 49.0)),
        _spec("tension-compression-spring", spring, spring_g, 4,
              [0.05, 0.25, 2.0], [2.0, 1.3, 15.0], 0.012665232787791716,
              "Tension/compression spring, Arora (1989) / Belegundu (1982); x = (d, D, N)",
              witness=(0.051689051166782844, 0.35671750080678144, 11.288979790076645)),
        _spec("pressure-vessel", pressure_vessel, pressure_vessel_g, 4,
              [0.0, 0.0, 10.0, 10.0], [99.0, 99.0, 200.0, 200.0], 5885.332773616465,
              "Pressure vessel, Kannan & Kramer (1994), continuous thicknesses "
              "(the mixed-integer version's optimum is 6059.714)",
              witness=(0.7781686413751255, 0.38464916262791177, 40.31961872409972, 200.0)),
        _spec("speed-reducer", speed_reducer, speed_reducer_g, 11,
              [2.6, 0.7, 17.0, 7.3, 7.3, 2.9, 5.0], [3.6, 0.8, 28.0, 8.3, 8.3, 3.9, 5.5], 2994.4710661,
              "Speed reducer, Golinski (1973) as in Mezura-Montes & Coello (2005)",
              witness=(3.500000002772834, 0.7, 17.000000215161503, 7.300000043130577, 7.715319988745831, 3.3502146732874234, 5.286654464978683)),
        _spec("i-beam-deflection", i_beam, i_beam_g, 2,
              [10.0, 10.0, 0.9, 0.9], [80.0, 50.0, 5.0, 5.0], 0.013074118905184789,
              "I-beam vertical deflection, Gandomi, Yang & Alavi (2013); x = (h, b, tw, tf)",
              witness=(80.0, 50.0, 0.9000000000000001, 2.3217922606852035)),
        _spec("tubular-column", tubular_column, tubular_column_g, 6,
              [2.0, 0.2], [14.0, 0.8], 26.499496883346783,
              "Tubular column, as in Gandomi, Yang & Alavi (2013); x = (d, t)",
              witness=(5.451156234296272, 0.2919654772996427)),
        _spec("piston-lever", piston_lever, piston_lever_g, 4,
              [0.05, 0.05, 0.05, 0.05], [500.0, 500.0, 500.0, 120.0], 8.41269832310627,
              "Piston lever, Bhattacharya / Gandomi, Yang & Alavi (2013); x = (H, B, D, X)",
              witness=(0.05000000000000401, 2.0415135909095388, 4.08302717981907, 120.0)),
        _spec("corrugated-bulkhead", corrugated_bulkhead, corrugated_bulkhead_g, 6,
              [0.0, 0.0, 0.0, 0.0], [100.0, 100.0, 100.0, 5.0], 6.842958010051708,
              "Corrugated bulkhead, Ravindran, Ragsdell & Reklaitis (2006); x = (b, h, l, t)",
              witness=(57.69230769226903, 34.14762033471367, 57.69230769234953, 1.0500000009970967)),
        _spec("car-side-impact", car_side_impact, car_side_impact_g, 10,
              [0.5] * 7 + [0.192, 0.192, -30.0, -30.0], [1.5] * 7 + [0.345, 0.345, 30.0, 30.0],
              22.842969191842712, "Car side impact, Gu et al. (2001) as in Gandomi, Yang & Alavi (2013)",
              witness=(0.5, 1.1163664312894976, 0.5, 1.30219578877762, 0.5, 1.5, 0.5, 0.3449999999999774, 0.3107986019013571, -19.561379056801456, -8.732588666832236e-05)),
    ]
