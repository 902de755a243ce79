"""
Single-particle mode transform over ``n`` steps.

Column ``m_in`` of a :class:`ModeMatrix` is the evolved state of a photon
that starts in ``m_in``. Creation operators transform with this matrix,
``a_in^dag -> sum_out U[out, in] a_out^dag``; the annihilator form tabulated
for the five-step walk is its conjugate transpose.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import golden
from .modes import ModeLabel, mode_count, mode_index, reachable_modes
from .single import evolve_block

__all__ = ["ModeMatrix", "build_mode_matrix", "verify_heisenberg_table", "HeisenbergReport"]


@dataclass(frozen=True)
class ModeMatrix:
    """Isometry from the modes at step ``start`` to the modes at ``start + n``."""

    n: int
    start: int
    matrix: np.ndarray

    @property
    def in_modes(self) -> list[ModeLabel]:
        return reachable_modes(self.start)

    @property
    def out_modes(self) -> list[ModeLabel]:
        return reachable_modes(self.start + self.n)

    def column(self, m_in: ModeLabel) -> np.ndarray:
        return self.matrix[:, mode_index(m_in, self.start)]

    def coefficient(self, m_out: ModeLabel, m_in: ModeLabel) -> complex:
        return complex(self.matrix[mode_index(m_out, self.start + self.n), mode_index(m_in, self.start)])

    def heisenberg(self) -> np.ndarray:
        """Rows: input annihilators; columns: output annihilators."""
        return self.matrix.conj().T

    def apply(self, vector: np.ndarray) -> np.ndarray:
        """Map an amplitude vector over the input modes to the output modes."""
        return self.matrix @ np.asarray(vector, dtype=np.complex128)

    def isometry_defect(self) -> float:
        gram = self.matrix.conj().T @ self.matrix
        return float(np.max(np.abs(gram - np.eye(gram.shape[0]))))


def build_mode_matrix(n: int, start: int = 0) -> ModeMatrix:
    """Evolve every reachable mode at step ``start`` through ``n`` steps.

    With ``start=0`` this gives the 4 columns for photons entering at the
    origin; larger ``start`` yields the wider ``4(start+1)``-column variant.
    """
    if n < 0 or start < 0:
        raise ValueError("step counts must be non-negative")
    k = mode_count(start)
    block = np.eye(k, dtype=np.complex128).reshape(start + 1, 4, k)
    out = evolve_block(block, n)
    return ModeMatrix(n=n, start=start, matrix=out.reshape(mode_count(start + n), k))


@dataclass(frozen=True)
class HeisenbergReport:
    per_input: dict[str, float]

    @property
    def max_deviation(self) -> float:
        return max(self.per_input.values())

    def passed(self, tol: float = 1e-12) -> bool:
        return self.max_deviation <= tol


def verify_heisenberg_table(matrix: ModeMatrix | None = None) -> HeisenbergReport:
    """Compare a five-step transform against the reference coefficients.

    Entries absent from the reference expansion are expected to vanish and
    are included in the comparison.
    """
    if matrix is None:
        matrix = build_mode_matrix(5)
    if matrix.n != 5 or matrix.start != 0:
        raise ValueError("the reference table covers the five-step transform from the origin")
    scale = 1.0 / (4.0 * math.sqrt(2.0))
    heis = matrix.heisenberg()
    out_modes = matrix.out_modes
    per_input = {}
    for coin, coeffs in golden.HEISENBERG_5.items():
        row = heis[mode_index(ModeLabel.of(0, coin), 0)]
        expected = np.array(
            [coeffs.get((m.q, m.coin), 0) * scale for m in out_modes], dtype=np.complex128
        )
        per_input[coin] = float(np.max(np.abs(row - expected)))
    return HeisenbergReport(per_input)
