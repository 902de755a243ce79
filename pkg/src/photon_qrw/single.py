"""
Exact single-photon walk.

One step is a half-wave plate (Hadamard on polarization) followed by a
polarizing beam splitter that shifts the photon according to its direction
and polarization:

    |q,h,x> -> (|q+1,h,x> + |q-1,v,y>) / sqrt(2)
    |q,h,y> -> (|q+1,h,x> - |q-1,v,y>) / sqrt(2)
    |q,v,x> -> (|q-1,v,x> + |q+1,h,y>) / sqrt(2)
    |q,v,y> -> (|q-1,v,x> - |q+1,h,y>) / sqrt(2)

States are stored densely over the ``4(n+1)`` reachable modes at step ``n``
in canonical order, which keeps a step at O(n) numpy work.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np

from .modes import (
    COIN_ORDER,
    ModeLabel,
    is_reachable,
    mode_count,
    mode_index,
    reachable_modes,
    reachable_sites,
)

__all__ = [
    "CoinState",
    "SinglePhotonState",
    "step",
    "evolve",
    "position_distribution",
    "classical_binomial",
    "classical_binomial_exact",
]

INV_SQRT2 = 1.0 / math.sqrt(2.0)
NORM_TOL = 1e-12


@dataclass(frozen=True)
class CoinState:
    """Four coin amplitudes over ``(hx, hy, vx, vy)`` at a single site."""

    hx: complex = 0.0
    hy: complex = 0.0
    vx: complex = 0.0
    vy: complex = 0.0

    @classmethod
    def from_mapping(cls, coeffs: Mapping[str, complex], normalize: bool = False) -> "CoinState":
        unknown = set(coeffs) - set(COIN_ORDER)
        if unknown:
            raise ValueError(f"unknown coin labels: {sorted(unknown)}")
        c = cls(**{k: complex(v) for k, v in coeffs.items()})
        return c.normalized() if normalize else c

    def as_array(self) -> np.ndarray:
        return np.array([self.hx, self.hy, self.vx, self.vy], dtype=np.complex128)

    def norm(self) -> float:
        return float(np.linalg.norm(self.as_array()))

    def normalized(self) -> "CoinState":
        nrm = self.norm()
        if nrm == 0.0:
            raise ValueError("cannot normalize an all-zero coin state")
        return CoinState(*(self.as_array() / nrm))

    def is_normalized(self, tol: float = NORM_TOL) -> bool:
        return abs(self.norm() - 1.0) <= tol


class SinglePhotonState:
    """Amplitudes of one photon over the reachable modes at step ``n``.

    The all-zero state is allowed so that ``step`` stays linear; call
    :meth:`check` to enforce unit norm.
    """

    __slots__ = ("n", "vector")

    def __init__(self, n: int, vector: np.ndarray):
        if n < 0:
            raise ValueError(f"step count must be non-negative, got {n}")
        vector = np.asarray(vector, dtype=np.complex128)
        if vector.shape != (mode_count(n),):
            raise ValueError(f"expected {mode_count(n)} amplitudes at step {n}, got shape {vector.shape}")
        self.n = n
        self.vector = vector
        self.vector.flags.writeable = False

    @classmethod
    def zero(cls, n: int = 0) -> "SinglePhotonState":
        return cls(n, np.zeros(mode_count(n), dtype=np.complex128))

    @classmethod
    def from_amplitudes(cls, n: int, amplitudes: Mapping[ModeLabel, complex]) -> "SinglePhotonState":
        vec = np.zeros(mode_count(n), dtype=np.complex128)
        for m, a in amplitudes.items():
            vec[mode_index(m, n)] += a
        return cls(n, vec)

    @classmethod
    def basis(cls, mode: ModeLabel | str, n: int = 0) -> "SinglePhotonState":
        if isinstance(mode, str):
            mode = ModeLabel.of(0, mode)
        return cls.from_amplitudes(n, {mode: 1.0})

    @classmethod
    def from_coin(cls, coin: CoinState, q: int = 0, n: int = 0) -> "SinglePhotonState":
        """Place the coin state at site ``q`` (default the origin at step 0)."""
        return cls.from_amplitudes(
            n, {ModeLabel.of(q, c): a for c, a in zip(COIN_ORDER, coin.as_array()) if a != 0}
        )

    @property
    def amplitudes(self) -> dict[ModeLabel, complex]:
        """Nonzero amplitudes keyed by mode, in canonical order."""
        modes = reachable_modes(self.n)
        return {modes[i]: complex(self.vector[i]) for i in np.flatnonzero(self.vector)}

    def amplitude(self, mode: ModeLabel) -> complex:
        if not is_reachable(self.n, mode.q):
            return 0j
        return complex(self.vector[mode_index(mode, self.n)])

    def site_block(self) -> np.ndarray:
        """View of the amplitudes as an ``(n+1, 4)`` array, rows ordered by site."""
        return self.vector.reshape(self.n + 1, 4)

    def norm(self) -> float:
        return float(np.linalg.norm(self.vector))

    def check(self, tol: float = NORM_TOL) -> "SinglePhotonState":
        if abs(self.norm() - 1.0) > tol:
            raise ValueError(f"state norm {self.norm():.3e} deviates from 1 by more than {tol}")
        return self

    def __add__(self, other: "SinglePhotonState") -> "SinglePhotonState":
        if self.n != other.n:
            raise ValueError("cannot add states at different steps")
        return SinglePhotonState(self.n, self.vector + other.vector)

    def __rmul__(self, scalar: complex) -> "SinglePhotonState":
        return SinglePhotonState(self.n, complex(scalar) * self.vector)

    def __repr__(self) -> str:
        return f"SinglePhotonState(n={self.n}, support={len(np.flatnonzero(self.vector))})"


def _step_block(a: np.ndarray) -> np.ndarray:
    """One HWP+PBS step on an ``(sites, 4, ...)`` block; returns ``(sites+1, 4, ...)``."""
    new = np.zeros((a.shape[0] + 1,) + a.shape[1:], dtype=np.complex128)
    hx, hy, vx, vy = a[:, 0], a[:, 1], a[:, 2], a[:, 3]
    # site slot i at step n is q = -n + 2i; q+1 lands in slot i+1 at step n+1, q-1 in slot i
    new[1:, 0] = INV_SQRT2 * (hx + hy)
    new[:-1, 3] = INV_SQRT2 * (hx - hy)
    new[:-1, 2] = INV_SQRT2 * (vx + vy)
    new[1:, 1] = INV_SQRT2 * (vx - vy)
    return new


def step(s: SinglePhotonState) -> SinglePhotonState:
    """Advance the state by one step."""
    return SinglePhotonState(s.n + 1, _step_block(s.site_block()).reshape(-1))


def evolve(s0: SinglePhotonState, n: int) -> SinglePhotonState:
    """Apply ``n`` steps to ``s0``."""
    if n < 0:
        raise ValueError(f"step count must be non-negative, got {n}")
    block = s0.site_block()
    for _ in range(n):
        block = _step_block(block)
    return SinglePhotonState(s0.n + n, block.reshape(-1))


def evolve_block(block: np.ndarray, n: int) -> np.ndarray:
    """Evolve several states at once: ``block`` has shape ``(sites, 4, k)``."""
    for _ in range(n):
        block = _step_block(block)
    return block


def position_distribution(s: SinglePhotonState) -> dict[int, float]:
    """Site probabilities summed over the four coin components."""
    probs = np.sum(np.abs(s.site_block()) ** 2, axis=1)
    return {q: float(p) for q, p in zip(reachable_sites(s.n), probs)}


_EXACT_BINOMIAL_MAX_N = 64


def classical_binomial_exact(n: int, q: int) -> Fraction:
    """Binomial probability of a classical walker at ``q`` after ``n`` steps."""
    if not is_reachable(n, q):
        raise ValueError(f"site {q} has wrong parity or lies outside the light cone at step {n}")
    return Fraction(math.comb(n, (n + q) // 2), 2**n)


def classical_binomial(n: int, q: int) -> float:
    """Float version of :func:`classical_binomial_exact`; log-space above n = 64."""
    if n <= _EXACT_BINOMIAL_MAX_N:
        return float(classical_binomial_exact(n, q))
    if not is_reachable(n, q):
        raise ValueError(f"site {q} has wrong parity or lies outside the light cone at step {n}")
    k = (n + q) // 2
    log_p = math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1) - n * math.log(2.0)
    return math.exp(log_p)
