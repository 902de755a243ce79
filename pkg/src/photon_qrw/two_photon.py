"""
Two indistinguishable photons in the walk.

A two-photon state is held as a symmetric matrix ``T`` over a list of
modes, with ``|psi> = sum_ij T[i, j] a_i^dag a_j^dag |0>``. Linear optics
then acts as ``T -> U T U^T``. The public coefficient of a normalized Fock
pair is ``2 T[i, j]`` for distinct modes and ``sqrt(2) T[i, i]`` for a doubly
occupied mode, so ``sum |c|^2 = 2 ||T||_F^2 = 1``.
"""

from __future__ import annotations

import math
from typing import Callable, Hashable, Iterable, Mapping, Sequence

import numpy as np

from .modes import Direction, ModeLabel, Polarization, mode_index, reachable_modes
from .transform import build_mode_matrix

__all__ = [
    "TwoPhotonState",
    "BELL_KINDS",
    "SEPARABLE_KINDS",
    "STANDARD_INPUTS",
    "separable_input",
    "bell_input",
    "named_input",
    "evolve_two_photon",
    "lift",
    "joint_probability",
    "joint_matrix",
    "resolved_joint_probability",
    "marginal_at_least_one",
    "correlation",
    "amplitude_matrix_rank",
    "bipartition_schmidt_rank",
]

SQRT2 = math.sqrt(2.0)
NORM_TOL = 1e-10

SEPARABLE_KINDS = ("xx", "xy", "yy", "yx")
BELL_KINDS = ("psi+", "psi-", "phi+", "phi-")
STANDARD_INPUTS = SEPARABLE_KINDS + BELL_KINDS


class TwoPhotonState:
    """Symmetric pair amplitudes over an explicit list of modes."""

    __slots__ = ("n", "modes", "matrix")

    def __init__(self, n: int, modes: Sequence[ModeLabel], matrix: np.ndarray):
        matrix = np.asarray(matrix, dtype=np.complex128)
        if matrix.shape != (len(modes), len(modes)):
            raise ValueError(f"matrix shape {matrix.shape} does not match {len(modes)} modes")
        if not np.allclose(matrix, matrix.T, atol=1e-14, rtol=0):
            raise ValueError("pair matrix must be symmetric")
        self.n = n
        self.modes = tuple(modes)
        self.matrix = matrix

    @classmethod
    def from_pairs(cls, n: int, pairs: Mapping[tuple[ModeLabel, ModeLabel], complex]) -> "TwoPhotonState":
        """Build from normalized-Fock-pair coefficients keyed by unordered mode pairs."""
        canon = {}
        for (a, b), c in pairs.items():
            key = (a, b) if a <= b else (b, a)
            if key in canon:
                raise ValueError(f"duplicate unordered pair {key[0]} {key[1]}")
            canon[key] = complex(c)
        modes = sorted({m for key in canon for m in key})
        pos = {m: i for i, m in enumerate(modes)}
        t = np.zeros((len(modes), len(modes)), dtype=np.complex128)
        for (a, b), c in canon.items():
            i, j = pos[a], pos[b]
            if i == j:
                t[i, i] = c / SQRT2
            else:
                t[i, j] = t[j, i] = c / 2.0
        return cls(n, modes, t)

    @property
    def pair_amplitudes(self) -> dict[tuple[ModeLabel, ModeLabel], complex]:
        """Nonzero coefficients on canonically ordered pairs ``m1 <= m2``."""
        order = sorted(range(len(self.modes)), key=self.modes.__getitem__)
        out = {}
        for ii, i in enumerate(order):
            for j in order[ii:]:
                t = self.matrix[i, j]
                if t != 0:
                    out[(self.modes[i], self.modes[j])] = complex(SQRT2 * t if i == j else 2.0 * t)
        return out

    def norm(self) -> float:
        return float(math.sqrt(2.0) * np.linalg.norm(self.matrix))

    def check(self, tol: float = NORM_TOL) -> "TwoPhotonState":
        if abs(self.norm() - 1.0) > tol:
            raise ValueError(f"two-photon norm {self.norm():.3e} deviates from 1 by more than {tol}")
        return self

    def normalized(self) -> "TwoPhotonState":
        nrm = self.norm()
        if nrm == 0.0:
            raise ValueError("cannot normalize the zero state")
        return TwoPhotonState(self.n, self.modes, self.matrix / nrm)

    def __repr__(self) -> str:
        return f"TwoPhotonState(n={self.n}, modes={len(self.modes)})"


def _origin(direction: str, pol: str) -> ModeLabel:
    return ModeLabel(0, Direction[direction], Polarization[pol])


def separable_input(pol1: str | Polarization, pol2: str | Polarization) -> TwoPhotonState:
    """One photon in ``(0,h,pol1)`` and one in ``(0,v,pol2)``."""
    p1 = Polarization[pol1] if isinstance(pol1, str) else Polarization(pol1)
    p2 = Polarization[pol2] if isinstance(pol2, str) else Polarization(pol2)
    return TwoPhotonState.from_pairs(0, {(ModeLabel(0, Direction.h, p1), ModeLabel(0, Direction.v, p2)): 1.0})


def bell_input(kind: str) -> TwoPhotonState:
    """Polarization Bell state with one photon in each input direction."""
    if kind not in BELL_KINDS:
        raise ValueError(f"unknown Bell state {kind!r}; expected one of {BELL_KINDS}")
    sign = 1.0 if kind.endswith("+") else -1.0
    if kind.startswith("psi"):
        first, second = ("x", "y"), ("y", "x")
    else:
        first, second = ("x", "x"), ("y", "y")
    r = 1.0 / SQRT2
    return TwoPhotonState.from_pairs(
        0,
        {
            (_origin("h", first[0]), _origin("v", first[1])): r,
            (_origin("h", second[0]), _origin("v", second[1])): sign * r,
        },
    )


def named_input(kind: str) -> TwoPhotonState:
    """Any of the eight standard inputs: ``xx xy yy yx psi+ psi- phi+ phi-``."""
    if kind in SEPARABLE_KINDS:
        return separable_input(kind[0], kind[1])
    return bell_input(kind)


def lift(s: TwoPhotonState, columns: np.ndarray, out_modes: Sequence[ModeLabel], n_out: int) -> TwoPhotonState:
    """Push both photons through a single-particle map.

    ``columns[:, k]`` is the image of ``s.modes[k]`` expanded over ``out_modes``.
    """
    u = np.asarray(columns, dtype=np.complex128)
    t = u @ s.matrix @ u.T
    # U T U^T is symmetric in exact arithmetic; symmetrize away rounding asymmetry
    t = 0.5 * (t + t.T)
    return TwoPhotonState(n_out, out_modes, t)


def evolve_two_photon(s: TwoPhotonState, n: int) -> TwoPhotonState:
    """Evolve both photons ``n`` steps through the walk."""
    if n < 0:
        raise ValueError(f"step count must be non-negative, got {n}")
    if n == 0:
        return s
    mm = build_mode_matrix(n, start=s.n)
    cols = mm.matrix[:, [mode_index(m, s.n) for m in s.modes]]
    return lift(s, cols, reachable_modes(s.n + n), s.n + n)


def _grouped_joint(s: TwoPhotonState, key: Callable[[ModeLabel], Hashable]):
    labels = sorted({key(m) for m in s.modes})
    pos = {lab: i for i, lab in enumerate(labels)}
    onehot = np.zeros((len(s.modes), len(labels)))
    for i, m in enumerate(s.modes):
        onehot[i, pos[key(m)]] = 1.0
    # ordered-pair weights 2|T_ij|^2 sum to one
    w = onehot.T @ (2.0 * np.abs(s.matrix) ** 2) @ onehot
    joint = w + w.T
    np.fill_diagonal(joint, np.diag(w))
    return labels, joint


def joint_matrix(s: TwoPhotonState) -> tuple[list[int], np.ndarray]:
    """Sites present in ``s`` and the symmetric matrix ``P(q1, q2)``."""
    return _grouped_joint(s, lambda m: m.q)


def joint_probability(s: TwoPhotonState) -> dict[tuple[int, int], float]:
    """Coincidence probabilities keyed ``(q1, q2)`` with ``q1 >= q2``."""
    sites, p = joint_matrix(s)
    return {
        (sites[i], sites[j]): float(p[i, j])
        for i in range(len(sites))
        for j in range(i + 1)
    }


def resolved_joint_probability(s: TwoPhotonState) -> dict[tuple[tuple[int, str], tuple[int, str]], float]:
    """Like :func:`joint_probability` but with polarization-sensitive detectors."""
    labels, p = _grouped_joint(s, lambda m: (m.q, m.pol.name))
    return {(labels[i], labels[j]): float(p[i, j]) for i in range(len(labels)) for j in range(i + 1)}


def marginal_at_least_one(s: TwoPhotonState) -> dict[int, float]:
    """Probability that at least one photon is detected at each site."""
    sites, p = joint_matrix(s)
    return {q: float(v) for q, v in zip(sites, p.sum(axis=1))}


def correlation(s: TwoPhotonState, q1: int, q2: int) -> float:
    """``P(q1, q2) - P(q1) P(q2)``; sites absent from the state count as zero."""
    joint = joint_probability(s)
    marg = marginal_at_least_one(s)
    key = (q1, q2) if q1 >= q2 else (q2, q1)
    return joint.get(key, 0.0) - marg.get(q1, 0.0) * marg.get(q2, 0.0)


def amplitude_matrix_rank(s: TwoPhotonState, tol: float = 1e-10) -> int:
    """Rank of the symmetric pair-amplitude matrix over modes."""
    sv = np.linalg.svd(s.matrix, compute_uv=False)
    return int(np.sum(sv > tol))


def bipartition_schmidt_rank(s: TwoPhotonState, in_a: Callable[[ModeLabel], bool] | Iterable[int] | None = None,
                             tol: float = 1e-10) -> int:
    """Schmidt rank of ``s`` across a split of the modes into parts A and B.

    ``in_a`` is a predicate on modes or a set of sites; the default puts
    sites ``q < 0`` in A. The Fock space factorizes into sectors with 2, 1
    or 0 photons in A, so the rank is the rank of the one-photon-each block
    plus one for each of the two-in-A and two-in-B parts that is nonzero.
    """
    if in_a is None:
        pred = lambda m: m.q < 0  # noqa: E731
    elif callable(in_a):
        pred = in_a
    else:
        sites = set(in_a)
        pred = lambda m: m.q in sites  # noqa: E731
    mask = np.array([bool(pred(m)) for m in s.modes], dtype=bool)
    t = s.matrix
    cross = t[np.ix_(mask, ~mask)]
    rank = 0
    if cross.size:
        rank += int(np.sum(np.linalg.svd(cross, compute_uv=False) > tol))
    if np.any(np.abs(t[np.ix_(mask, mask)]) > tol):
        rank += 1
    if np.any(np.abs(t[np.ix_(~mask, ~mask)]) > tol):
        rank += 1
    return rank
