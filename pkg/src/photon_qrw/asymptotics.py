"""
Fourier-domain analysis of the single-photon walk and its large-n limit.

In momentum space one step is the 4x4 unitary ``M_k = e^{ik} M_+ + e^{-ik} M_-``
with eigenvalues ``-1, 1, e^{-i w_k}, e^{i w_k}``, ``cos w_k = cos(k)/sqrt(2)``.
Inverting the transform gives each site amplitude as a static integral that
does not depend on ``n`` plus oscillatory integrals of the form

    J(n, q) = int_{-pi}^{pi} exp(-i (n w_k + q k)) / (1 + sin^2 k) dk

evaluated at small shifts of ``(n, q)``. ``exact_coefficients`` computes these
by periodic trapezoid quadrature; ``stationary_phase_coefficients`` replaces
the oscillatory part by its stationary-phase estimate.

The phase ``-(w_k + k q/n)`` is stationary at ``k0 = asin(-a / sqrt(1 - a^2))``
and at ``pi - k0`` (``a = q/n``). The two contributions are complex conjugates
when ``n + q`` is even, which gives ``2 cos(n' w0 + q' k0 + pi/4)`` per
oscillatory term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np

from .modes import COIN_ORDER, ModeLabel, mode_count, mode_index, reachable_modes
from .single import CoinState, SinglePhotonState, evolve, position_distribution
from .two_photon import TwoPhotonState, lift, named_input

__all__ = [
    "QuadratureError",
    "FourierPropagator",
    "AsymptoticCoefficients",
    "M_PLUS",
    "M_MINUS",
    "GAMMA_ONE_THIRD",
    "omega",
    "fourier_propagator",
    "eigensystem",
    "static_integral",
    "oscillatory_integral",
    "exact_coefficients",
    "exact_amplitudes",
    "stationary_phase_coefficients",
    "stationary_phase_amplitudes",
    "approx_columns",
    "approx_single_state",
    "approx_two_photon_state",
    "calibrate_branch",
]

SQRT2 = math.sqrt(2.0)
GAMMA_ONE_THIRD = math.gamma(1.0 / 3.0)
EDGE = 1.0 / SQRT2
EDGE_TOL = 1e-12
QUAD_TOL = 1e-10

Initial = Literal["hx", "hy"]
Branch = Literal["principal", "conjugate"]

M_PLUS = np.array([[1, 1, 0, 0], [0, 0, 1, -1], [0, 0, 0, 0], [0, 0, 0, 0]], dtype=np.complex128) / SQRT2
M_MINUS = np.array([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 1], [1, -1, 0, 0]], dtype=np.complex128) / SQRT2

# Coefficient recipes for photons starting in |0,0,h,x> (f) and |0,0,h,y> (g).
# static: (weight, m) terms of int cos(m k) / (2 - sqrt2 cos k), with m = q + shift.
# dynamic: (weight, dn, dq) terms of J(n + dn, q + dq).
_R = SQRT2
RECIPES = {
    "hx": {
        "hx": ([(1.0, 0)], [(3.0, 0, 0), (-_R, -1, 1), (-_R, 1, -1)]),
        "hy": ([(_R, 1), (-1.0, 0)], [(1.0, 0, 0), (-_R, -1, 1)]),
        "vx": ([(1.0, 2)], [(-1.0, 0, 2)]),
        "vy": ([(_R, 1), (-1.0, 2)], [(_R, -1, 1), (-1.0, 0, 0)]),
    },
    "hy": {
        "hx": ([(_R, -1), (-1.0, 0)], [(1.0, 0, 0), (-_R, 1, -1)]),
        "hy": ([(3.0, 0), (-_R, 1), (-_R, -1)], [(1.0, 0, 0)]),
        "vx": ([(_R, 1), (-1.0, 2)], [(_R, 1, 1), (-1.0, 0, 0)]),
        "vy": ([(2.0, 0), (-2.0 * _R, 1), (1.0, 2)], [(-1.0, 0, 0)]),
    },
}


class QuadratureError(RuntimeError):
    def __init__(self, message: str, error_estimate: float):
        super().__init__(f"{message} (error estimate {error_estimate:.3e})")
        self.error_estimate = error_estimate


def omega(k):
    """Quasi-energy ``w_k`` in ``[pi/4, 3pi/4]`` with ``cos w_k = cos(k)/sqrt(2)``."""
    return np.arccos(np.cos(k) / SQRT2)


@dataclass(frozen=True)
class FourierPropagator:
    k: float
    matrix: np.ndarray


def fourier_propagator(k: float) -> FourierPropagator:
    if not -math.pi <= k <= math.pi:
        raise ValueError(f"wavenumber must lie in [-pi, pi], got {k}")
    return FourierPropagator(k, np.exp(1j * k) * M_PLUS + np.exp(-1j * k) * M_MINUS)


def eigensystem(k: float) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form eigenvalues and unit eigenvectors (as columns) of ``M_k``.

    Order: ``-1, 1, exp(-i w_k), exp(i w_k)``.
    """
    if not -math.pi <= k <= math.pi:
        raise ValueError(f"wavenumber must lie in [-pi, pi], got {k}")
    e, ei = np.exp(1j * k), np.exp(-1j * k)
    c = math.cos(k)
    w = float(omega(k))
    n1 = 0.5 * math.sqrt((3 + 2 * SQRT2 * c) / (2 + SQRT2 * c))
    n2 = 0.5 * math.sqrt((3 - 2 * SQRT2 * c) / (2 - SQRT2 * c))
    n34 = 1.0 / (2.0 * math.sqrt(1.0 + math.sin(k) ** 2))
    phi1 = n1 * np.array([-e / (SQRT2 + ei), (SQRT2 + e) / (SQRT2 + ei), -ei / (SQRT2 + ei), 1])
    phi2 = n2 * np.array([e / (SQRT2 - ei), (SQRT2 - e) / (SQRT2 - ei), ei / (SQRT2 - ei), 1])
    phi3 = n34 * np.array([-1 + SQRT2 * np.exp(-1j * (w - k)), -1, 1 - SQRT2 * np.exp(-1j * (w + k)), 1])
    phi4 = n34 * np.array([-1 + SQRT2 * np.exp(1j * (w + k)), -1, 1 - SQRT2 * np.exp(1j * (w - k)), 1])
    values = np.array([-1.0, 1.0, np.exp(-1j * w), np.exp(1j * w)], dtype=np.complex128)
    return values, np.stack([phi1, phi2, phi3, phi4], axis=1).astype(np.complex128)


def _grid_size(n: int) -> int:
    return max(4096, 64 * n)


def _fourier_coefficients(samples: np.ndarray) -> np.ndarray:
    """``(2pi/N) sum_j g(k_j) exp(-i m k_j)`` for all ``m mod N`` on ``k_j = -pi + 2 pi j / N``."""
    n_pts = samples.shape[-1]
    m = np.arange(n_pts)
    return (2.0 * math.pi / n_pts) * np.exp(1j * math.pi * m) * np.fft.fft(samples)


def _grid(n_pts: int) -> np.ndarray:
    return -math.pi + 2.0 * math.pi * np.arange(n_pts) / n_pts


@lru_cache(maxsize=8)
def _static_table(n_pts: int) -> np.ndarray:
    k = _grid(n_pts)
    # denominator >= 2 - sqrt2 > 0 on the whole circle
    return _fourier_coefficients(1.0 / (2.0 - SQRT2 * np.cos(k))).real


@lru_cache(maxsize=32)
def _dynamic_table(n: int, n_pts: int) -> np.ndarray:
    k = _grid(n_pts)
    return _fourier_coefficients(np.exp(-1j * n * omega(k)) / (1.0 + np.sin(k) ** 2))


def static_integral(m: int, n_pts: int = 4096) -> float:
    """``int_{-pi}^{pi} cos(m k) / (2 - sqrt2 cos k) dk`` by periodic trapezoid."""
    table = _static_table(n_pts)
    return float(table[m % n_pts])


def oscillatory_integral(n: int, q: int, n_pts: int | None = None) -> complex:
    """``J(n, q) = int exp(-i (n w_k + q k)) / (1 + sin^2 k) dk``."""
    n_pts = n_pts or _grid_size(abs(n))
    return complex(_dynamic_table(n, n_pts)[q % n_pts])


@dataclass(frozen=True)
class AsymptoticCoefficients:
    """Four site amplitudes ``(hx, hy, vx, vy)`` for one initial coin."""

    n: int
    q: int
    initial: str
    values: np.ndarray
    method: Literal["exact-integral", "stationary-phase"]
    error_estimate: float = 0.0

    def as_dict(self) -> dict[str, complex]:
        return {c: complex(v) for c, v in zip(COIN_ORDER, self.values)}


def _check_initial(initial: str):
    if initial not in RECIPES:
        raise ValueError(f"initial coin must be 'hx' or 'hy', got {initial!r}")


def _parity(n: int, q: int) -> float:
    return (1 + (-1) ** ((n + q) % 2)) / (8.0 * math.pi)


def _static_part(q: int, recipe, n_pts: int = 4096) -> complex:
    table = _static_table(n_pts)
    return sum(w * table[(q + shift) % n_pts] for w, shift in recipe)


def _exact_values(n: int, q: int, initial: str, n_pts: int) -> np.ndarray:
    par = _parity(n, q)
    if par == 0.0:
        return np.zeros(4, dtype=np.complex128)
    out = np.empty(4, dtype=np.complex128)
    for i, coin in enumerate(COIN_ORDER):
        static, dynamic = RECIPES[initial][coin]
        osc = sum(w * _dynamic_table(n + dn, n_pts)[(q + dq) % n_pts] for w, dn, dq in dynamic)
        out[i] = par * (_static_part(q, static, n_pts) + osc)
    return out


def exact_coefficients(n: int, q: int, initial: Initial, tol: float = QUAD_TOL) -> AsymptoticCoefficients:
    """Site amplitudes from the exact Fourier integrals, by quadrature.

    The grid has ``max(4096, 64 n)`` points; the error estimate is the change
    on doubling it.

    Raises
    ------
    QuadratureError
        If the doubling estimate exceeds ``tol``.
    """
    if n < 1:
        raise ValueError(f"exact coefficients need n >= 1, got {n}")
    _check_initial(initial)
    n_pts = _grid_size(n)
    coarse = _exact_values(n, q, initial, n_pts)
    fine = _exact_values(n, q, initial, 2 * n_pts)
    err = float(np.max(np.abs(fine - coarse)))
    if err > tol:
        raise QuadratureError(f"quadrature did not converge for n={n}, q={q}", err)
    return AsymptoticCoefficients(n, q, initial, fine, "exact-integral", err)


def exact_amplitudes(n: int, initial: Initial, tol: float = QUAD_TOL) -> SinglePhotonState:
    """All reachable site amplitudes at step ``n`` from :func:`exact_coefficients`."""
    vec = np.zeros(mode_count(n), dtype=np.complex128)
    for slot, q in enumerate(range(-n, n + 1, 2)):
        vec[4 * slot: 4 * slot + 4] = exact_coefficients(n, q, initial, tol).values
    return SinglePhotonState(n, vec)


def _phase_curvature(k0: float) -> float:
    # w'' = cos k / (1 + sin^2 k)^{3/2}; the phase is -(w + k a)
    return math.cos(k0) / (1.0 + math.sin(k0) ** 2) ** 1.5


def _edge_integral(n: int, dn: int, dq: int, q: int, sign: int) -> complex:
    """Cubic stationary point at ``k = -sign * pi/2`` where ``q/n = sign / sqrt2``."""
    k_star = -sign * math.pi / 2.0
    w = float(omega(k_star))
    amp = np.exp(-1j * (dn * w + dq * k_star)) / (1.0 + math.sin(k_star) ** 2)
    pref = (6.0 / n) ** (1.0 / 3.0) * SQRT2 * GAMMA_ONE_THIRD / math.sqrt(3.0)
    return pref * amp * np.exp(-1j * (n * w + q * k_star))


def stationary_phase_coefficients(n: int, q: int, initial: Initial,
                                  branch: Branch = "principal") -> AsymptoticCoefficients:
    """Large-``n`` site amplitudes.

    Inside ``|q/n| < 1/sqrt(2)`` the oscillatory integrals are replaced by
    their two-point stationary-phase value; exactly on the edge the cubic
    stationary point formula is used; outside, all four values are zero.
    ``branch="conjugate"`` flips the sign of ``w0`` and exists only for
    :func:`calibrate_branch`.
    """
    if n < 1:
        raise ValueError(f"stationary phase needs n >= 1, got {n}")
    _check_initial(initial)
    alpha = q / n
    values = np.zeros(4, dtype=np.complex128)
    par = _parity(n, q)
    if par == 0.0 or abs(alpha) > EDGE + EDGE_TOL:
        return AsymptoticCoefficients(n, q, initial, values, "stationary-phase")

    on_edge = abs(abs(alpha) - EDGE) <= EDGE_TOL
    if not on_edge:
        k0 = math.asin(-alpha / math.sqrt(1.0 - alpha * alpha))
        w0 = float(omega(k0)) * (1.0 if branch == "principal" else -1.0)
        pref = 2.0 * math.sqrt(2.0 * math.pi / (n * abs(_phase_curvature(k0)))) / (1.0 + math.sin(k0) ** 2)

    for i, coin in enumerate(COIN_ORDER):
        static, dynamic = RECIPES[initial][coin]
        if on_edge:
            sign = 1 if alpha > 0 else -1
            osc = sum(w * _edge_integral(n, dn, dq, q, sign) for w, dn, dq in dynamic)
        else:
            osc = pref * sum(
                w * math.cos((n + dn) * w0 + (q + dq) * k0 + math.pi / 4.0) for w, dn, dq in dynamic
            )
        values[i] = par * (_static_part(q, static) + osc)
    return AsymptoticCoefficients(n, q, initial, values, "stationary-phase")


def stationary_phase_amplitudes(n: int, initial: Initial, branch: Branch = "principal") -> SinglePhotonState:
    vec = np.zeros(mode_count(n), dtype=np.complex128)
    for slot, q in enumerate(range(-n, n + 1, 2)):
        vec[4 * slot: 4 * slot + 4] = stationary_phase_coefficients(n, q, initial, branch).values
    return SinglePhotonState(n, vec)


def _mirror(state: SinglePhotonState) -> SinglePhotonState:
    """Swap h and v and send q to -q."""
    return SinglePhotonState.from_amplitudes(state.n, {m.mirrored(): a for m, a in state.amplitudes.items()})


def approx_columns(n: int) -> np.ndarray:
    """Approximate images of the four origin modes, as ``(4(n+1), 4)`` columns."""
    hx = stationary_phase_amplitudes(n, "hx")
    hy = stationary_phase_amplitudes(n, "hy")
    cols = {"hx": hx, "hy": hy, "vx": _mirror(hx), "vy": _mirror(hy)}
    return np.stack([cols[c].vector for c in COIN_ORDER], axis=1)


def approx_single_state(n: int, coin: CoinState) -> SinglePhotonState:
    """Stationary-phase state after ``n`` steps for a photon starting at the origin."""
    if not coin.is_normalized():
        raise ValueError("coin state must be normalized")
    return SinglePhotonState(n, approx_columns(n) @ coin.as_array())


def approx_two_photon_state(n: int, kind: str) -> TwoPhotonState:
    """Symmetrized product of approximate single-photon images for a standard input.

    The approximate images are not exactly normalized, so the assembled state
    is renormalized to unit norm.
    """
    if n < 1:
        raise ValueError(f"approximate two-photon state needs n >= 1, got {n}")
    s0 = named_input(kind)
    cols = approx_columns(n)[:, [mode_index(m, 0) for m in s0.modes]]
    return lift(s0, cols, reachable_modes(n), n).normalized()


def calibrate_branch(n: int = 50, initial: Initial = "hx") -> dict[str, float]:
    """Total-variation distance to the exact walk for each choice of ``w0`` sign."""
    exact = position_distribution(evolve(SinglePhotonState.basis(ModeLabel.of(0, initial)), n))
    out = {}
    for branch in ("principal", "conjugate"):
        approx = position_distribution(stationary_phase_amplitudes(n, initial, branch))
        out[branch] = 0.5 * sum(abs(exact[q] - approx[q]) for q in exact)
    return out
