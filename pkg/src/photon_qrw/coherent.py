"""
Product coherent-state inputs.

Linear optics maps a product of coherent states to another product of
coherent states whose amplitudes transform exactly like single-photon
amplitudes. Detection statistics therefore factorize across sites.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np

from .modes import ModeLabel, mode_count, mode_index, reachable_modes, reachable_sites
from .transform import build_mode_matrix

__all__ = [
    "CoherentField",
    "evolve_coherent",
    "normalized_detection",
    "weak_field_distribution_exact",
    "coherent_joint_detection",
]


@dataclass(frozen=True)
class CoherentField:
    """Coherent amplitude per reachable mode at step ``n`` (canonical order)."""

    n: int
    vector: np.ndarray

    def __post_init__(self):
        vec = np.asarray(self.vector, dtype=np.complex128)
        if vec.shape != (mode_count(self.n),):
            raise ValueError(f"expected {mode_count(self.n)} amplitudes at step {self.n}, got {vec.shape}")
        object.__setattr__(self, "vector", vec)

    @classmethod
    def from_amplitudes(cls, n: int, amplitudes: Mapping[ModeLabel, complex]) -> "CoherentField":
        vec = np.zeros(mode_count(n), dtype=np.complex128)
        for m, a in amplitudes.items():
            vec[mode_index(m, n)] += a
        return cls(n, vec)

    @classmethod
    def two_port(cls, alpha: complex, beta: complex) -> "CoherentField":
        """``|alpha>`` in ``(0,h,x)`` and ``|beta>`` in ``(0,v,y)``."""
        return cls.from_amplitudes(0, {ModeLabel.of(0, "hx"): alpha, ModeLabel.of(0, "vy"): beta})

    @property
    def amplitudes(self) -> dict[ModeLabel, complex]:
        modes = reachable_modes(self.n)
        return {modes[i]: complex(self.vector[i]) for i in np.flatnonzero(self.vector)}

    def amplitude(self, mode: ModeLabel) -> complex:
        return complex(self.vector[mode_index(mode, self.n)])

    def mean_photon_number(self) -> float:
        return float(np.sum(np.abs(self.vector) ** 2))

    def site_means(self) -> dict[int, float]:
        means = np.sum(np.abs(self.vector.reshape(self.n + 1, 4)) ** 2, axis=1)
        return {q: float(v) for q, v in zip(reachable_sites(self.n), means)}


def evolve_coherent(f: CoherentField, n: int) -> CoherentField:
    if n < 0:
        raise ValueError(f"step count must be non-negative, got {n}")
    if n == 0:
        return f
    return CoherentField(f.n + n, build_mode_matrix(n, start=f.n).apply(f.vector))


def normalized_detection(f: CoherentField) -> dict[int, float]:
    """Mean photon number per site divided by the total mean photon number.

    This is the weak-field single-detection probability to leading order in
    the amplitudes; it is independent of their overall scale.
    """
    total = f.mean_photon_number()
    if total == 0.0:
        raise ValueError("normalized detection is undefined for an all-zero field")
    return {q: v / total for q, v in f.site_means().items()}


def weak_field_distribution_exact(alpha: int, beta: int, n: int) -> dict[int, Fraction]:
    """Exact rational :func:`normalized_detection` for integer port amplitudes.

    Steps are taken without the ``1/sqrt(2)`` factors so every amplitude stays
    an integer; the factor ``2^n`` is restored in the final ratio.
    """
    if alpha == 0 and beta == 0:
        raise ValueError("normalized detection is undefined for an all-zero field")
    amps: dict[tuple[int, str], int] = {(0, "hx"): int(alpha), (0, "vy"): int(beta)}
    for _ in range(n):
        new: dict[tuple[int, str], int] = {}
        for (q, c), a in amps.items():
            if c == "hx":
                moves = (((q + 1, "hx"), a), ((q - 1, "vy"), a))
            elif c == "hy":
                moves = (((q + 1, "hx"), a), ((q - 1, "vy"), -a))
            elif c == "vx":
                moves = (((q - 1, "vx"), a), ((q + 1, "hy"), a))
            else:
                moves = (((q - 1, "vx"), a), ((q + 1, "hy"), -a))
            for key, v in moves:
                new[key] = new.get(key, 0) + v
        amps = new
    total = (alpha * alpha + beta * beta) * 2**n
    out = {q: Fraction(0) for q in reachable_sites(n)}
    for (q, _), a in amps.items():
        out[q] += Fraction(a * a, total)
    return out


def coherent_joint_detection(f: CoherentField, q1: int, q2: int, weak_amplitude: float = 1.0) -> dict[str, float]:
    """Click statistics for on/off detectors at two sites.

    Each site sees a Poissonian photon number with mean
    ``|weak_amplitude|^2 * sum_{modes at q} |alpha|^2``. Distinct sites are
    independent because the field is a product state, so the returned
    correlation ``sigma`` vanishes identically. For ``q1 == q2`` the joint
    entry is the probability of at least two photons at that site.
    """
    scale = abs(weak_amplitude) ** 2
    means = f.site_means()
    n1 = scale * means.get(q1, 0.0)
    n2 = scale * means.get(q2, 0.0)
    p1 = -math.expm1(-n1)
    p2 = -math.expm1(-n2)
    if q1 != q2:
        p12 = p1 * p2
    else:
        p12 = 1.0 - math.exp(-n1) * (1.0 + n1)
    return {"P1": p1, "P2": p2, "P12": p12, "sigma": p12 - p1 * p2}
