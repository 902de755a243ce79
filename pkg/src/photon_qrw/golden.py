"""
Reference values for the five-step walk.

All two-photon tables are stored as ``128 * P`` in a 6x6 grid whose rows are
``q2`` and columns ``q1``, both running over ``SITES5``. Transform and
coherent-output coefficients are integer multiples of ``1 / (4 sqrt 2)``.
"""

from __future__ import annotations

from fractions import Fraction

SITES5 = (-5, -3, -1, 1, 3, 5)
TABLE_SCALE = 128

# Heisenberg transform: input annihilator at (0,0) -> sum of step-5 annihilators.
# Keys: input coin -> {(q, output coin): integer numerator}.
HEISENBERG_5 = {
    "hx": {
        (-5, "vx"): 1, (-3, "hy"): 1, (-3, "vx"): 1, (-3, "vy"): -1,
        (-1, "hx"): 1, (-1, "hy"): 3, (-1, "vx"): 1, (-1, "vy"): 1,
        (1, "hx"): 1, (1, "hy"): 1, (1, "vx"): 1, (1, "vy"): -1,
        (3, "hx"): -3, (3, "hy"): -1, (3, "vy"): 1, (5, "hx"): 1,
    },
    "hy": {
        (-5, "vx"): -1, (-3, "hy"): -1, (-3, "vx"): 1, (-3, "vy"): 1,
        (-1, "hx"): -1, (-1, "hy"): -1, (-1, "vx"): 3, (-1, "vy"): -3,
        (1, "hx"): 1, (1, "hy"): -1, (1, "vx"): 1, (1, "vy"): 1,
        (3, "hx"): -1, (3, "hy"): -1, (3, "vy"): 1, (5, "hx"): 1,
    },
    "vx": {
        (-5, "vx"): 1, (-3, "hy"): 1, (-3, "vx"): -3, (-3, "vy"): -1,
        (-1, "hx"): 1, (-1, "hy"): -1, (-1, "vx"): 1, (-1, "vy"): 1,
        (1, "hx"): 1, (1, "hy"): 1, (1, "vx"): 1, (1, "vy"): 3,
        (3, "hx"): 1, (3, "hy"): -1, (3, "vy"): 1, (5, "hx"): 1,
    },
    "vy": {
        (-5, "vx"): 1, (-3, "hy"): 1, (-3, "vx"): -1, (-3, "vy"): -1,
        (-1, "hx"): 1, (-1, "hy"): 1, (-1, "vx"): 1, (-1, "vy"): -1,
        (1, "hx"): 3, (1, "hy"): -3, (1, "vx"): -1, (1, "vy"): -1,
        (3, "hx"): 1, (3, "hy"): 1, (3, "vy"): -1, (5, "hx"): -1,
    },
}

# Coherent output after five steps for input |alpha>_hx |beta>_vy at the origin.
# (q, coin) -> (alpha coefficient, beta coefficient), both over 4 sqrt 2.
COHERENT_OUTPUT_5 = {
    (-5, "vx"): (1, 1),
    (-3, "hy"): (1, 1), (-3, "vx"): (1, -1), (-3, "vy"): (-1, -1),
    (-1, "hx"): (1, 1), (-1, "hy"): (3, 1), (-1, "vx"): (1, 1), (-1, "vy"): (1, -1),
    (1, "hx"): (1, 3), (1, "hy"): (1, -3), (1, "vx"): (1, -1), (1, "vy"): (-1, -1),
    (3, "hx"): (-3, 1), (3, "hy"): (-1, 1), (3, "vy"): (1, -1),
    (5, "hx"): (1, -1),
}

# Separable Fock inputs, keyed by (pol of the h photon, pol of the v photon).
TABLE_I = {
    "xx": {
        "joint": [
            [0.25, 1.5, 2, 2, 1.5, 0.5],
            [1.5, 4.25, 18, 10, 16.5, 1.5],
            [2, 18, 6, 20, 10, 2],
            [2, 10, 20, 6, 18, 2],
            [1.5, 16.5, 10, 18, 4.25, 1.5],
            [0.5, 1.5, 2, 2, 1.5, 0.25],
        ],
        "marginal": [7.75, 51.75, 58, 58, 51.75, 7.75],
    },
    "xy": {
        "joint": [
            [0.25, 1, 3, 3, 0.5, 0],
            [1, 1.25, 7, 9, 4, 0.5],
            [3, 7, 8, 32, 5, 1],
            [3, 9, 32, 10, 29, 3],
            [0.5, 4, 5, 29, 7.25, 3],
            [0, 0.5, 1, 3, 3, 0.25],
        ],
        "marginal": [7.75, 22.75, 56, 86, 48.75, 7.75],
    },
    "yy": {
        "joint": [
            [0.25, 1.5, 2, 2, 1.5, 0.5],
            [1.5, 2.25, 6, 6, 4.5, 1.5],
            [2, 6, 12, 56, 6, 2],
            [2, 6, 56, 12, 6, 2],
            [1.5, 4.5, 6, 6, 2.25, 1.5],
            [0.5, 1.5, 2, 2, 1.5, 0.25],
        ],
        "marginal": [7.75, 21.75, 84, 84, 21.75, 7.75],
    },
    "yx": {
        "joint": [
            [0.25, 3, 3, 1, 0.5, 0],
            [3, 7.25, 29, 5, 4, 0.5],
            [3, 29, 10, 32, 9, 3],
            [1, 5, 32, 8, 7, 3],
            [0.5, 4, 9, 7, 1.25, 1],
            [0, 0.5, 3, 3, 1, 0.25],
        ],
        "marginal": [7.75, 48.75, 86, 56, 22.75, 7.75],
    },
}

# Panel letters: (a) xx, (b) xy, (c) yy, (d) yx.
TABLE_I_PANELS = {"a": "xx", "b": "xy", "c": "yy", "d": "yx"}

TABLE_III = {
    "psi+": {
        "joint": [
            [0, 1, 3, 3, 1, 0],
            [1, 4, 15, 7, 8, 1],
            [3, 15, 9, 34, 7, 3],
            [3, 7, 34, 9, 15, 3],
            [1, 8, 7, 15, 4, 1],
            [0, 1, 3, 3, 1, 0],
        ],
        "marginal": [8, 36, 71, 71, 36, 8],
    },
    "psi-": {
        "joint": [
            [0.5, 3, 3, 1, 0, 0],
            [3, 4.5, 21, 7, 0, 0],
            [3, 21, 9, 30, 7, 1],
            [1, 7, 30, 9, 21, 3],
            [0, 0, 7, 21, 4.5, 3],
            [0, 0, 1, 3, 3, 0.5],
        ],
        "marginal": [7.5, 35.5, 71, 71, 35.5, 7.5],
    },
    "phi+": {
        "joint": [
            [0, 0, 1, 3, 3, 1],
            [0, 2, 7, 9, 17, 3],
            [1, 7, 9, 42, 9, 3],
            [3, 9, 42, 9, 7, 1],
            [3, 17, 9, 7, 2, 0],
            [1, 3, 3, 1, 0, 0],
        ],
        "marginal": [8, 38, 71, 71, 38, 8],
    },
    "phi-": {
        "joint": [
            [0.5, 3, 3, 1, 0, 0],
            [3, 4.5, 17, 7, 4, 0],
            [3, 17, 9, 34, 7, 1],
            [1, 7, 34, 9, 17, 3],
            [0, 4, 7, 17, 4.5, 3],
            [0, 0, 1, 3, 3, 0.5],
        ],
        "marginal": [7.5, 35.5, 71, 71, 35.5, 7.5],
    },
}

TABLE_III_PANELS = {"a": "psi+", "b": "psi-", "c": "phi+", "d": "phi-"}

# Weak coherent inputs: (alpha, beta) in units of f -> normalized P(q) over SITES5.
TABLE_II = {
    (1, 1): [Fraction(1, 16), Fraction(1, 8), Fraction(3, 8), Fraction(3, 8), Fraction(1, 16), Fraction(0)],
    (1, -1): [Fraction(0), Fraction(1, 16), Fraction(1, 8), Fraction(3, 8), Fraction(3, 8), Fraction(1, 16)],
    (1, 0): [Fraction(1, 32), Fraction(3, 32), Fraction(3, 8), Fraction(1, 8), Fraction(11, 32), Fraction(1, 32)],
    (0, 1): [Fraction(1, 32), Fraction(3, 32), Fraction(1, 8), Fraction(5, 8), Fraction(3, 32), Fraction(1, 32)],
}
