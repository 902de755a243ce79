"""
Mode basis for a photon walking on a line with a four-sided coin.

A single-photon mode is labelled by a lattice site ``q``, a propagation
direction (``h`` or ``v``) and a linear polarization (``x`` or ``y``).
Horizontal displacement moves the photon towards ``+q``, vertical
displacement towards ``-q``.

Modes are totally ordered by ``(q, dir, pol)`` with ``h < v`` and ``x < y``.
Within one step ``n`` the reachable sites are ``-n, -n+2, ..., n`` and the
dense index of a mode is ``4 * site_slot + coin_slot``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum

__all__ = [
    "Direction",
    "Polarization",
    "ModeLabel",
    "COIN_ORDER",
    "is_reachable",
    "reachable_sites",
    "reachable_modes",
    "mode_count",
    "mode_index",
    "mode_from_index",
    "parse_mode",
]


class Direction(IntEnum):
    h = 0
    v = 1


class Polarization(IntEnum):
    x = 0
    y = 1


@dataclass(frozen=True, order=True)
class ModeLabel:
    q: int
    dir: Direction
    pol: Polarization

    def __post_init__(self):
        object.__setattr__(self, "q", int(self.q))
        object.__setattr__(self, "dir", Direction(self.dir))
        object.__setattr__(self, "pol", Polarization(self.pol))

    @classmethod
    def of(cls, q: int, coin: str) -> "ModeLabel":
        """Build a mode from a site and a two-letter coin name such as ``"hx"``."""
        if len(coin) != 2:
            raise ValueError(f"coin name must be two letters like 'hx', got {coin!r}")
        return cls(q, Direction[coin[0]], Polarization[coin[1]])

    @property
    def coin(self) -> str:
        return self.dir.name + self.pol.name

    @property
    def coin_slot(self) -> int:
        return 2 * int(self.dir) + int(self.pol)

    def mirrored(self) -> "ModeLabel":
        """Swap ``h`` and ``v`` and reflect the site, keeping the polarization."""
        return ModeLabel(-self.q, Direction(1 - self.dir), self.pol)

    def __str__(self) -> str:
        return f"({self.q},{self.dir.name},{self.pol.name})"


COIN_ORDER: tuple[str, ...] = ("hx", "hy", "vx", "vy")

_MODE_RE = re.compile(r"^\(\s*(-?\d+)\s*,\s*([hv])\s*,\s*([xy])\s*\)$")


def parse_mode(text: str) -> ModeLabel:
    """Inverse of ``str(ModeLabel)``: ``"(-3,v,x)"`` -> ``ModeLabel(-3, v, x)``."""
    m = _MODE_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a mode label: {text!r}")
    return ModeLabel(int(m.group(1)), Direction[m.group(2)], Polarization[m.group(3)])


def is_reachable(n: int, q: int) -> bool:
    """True iff site ``q`` can carry amplitude after ``n`` steps from ``q = 0``."""
    if n < 0:
        raise ValueError(f"step count must be non-negative, got {n}")
    return abs(q) <= n and (n + q) % 2 == 0


def reachable_sites(n: int) -> range:
    return range(-n, n + 1, 2)


def mode_count(n: int) -> int:
    return 4 * (n + 1)


def reachable_modes(n: int) -> list[ModeLabel]:
    """All reachable modes at step ``n`` in canonical order."""
    return [ModeLabel.of(q, c) for q in reachable_sites(n) for c in COIN_ORDER]


def mode_index(m: ModeLabel, n: int) -> int:
    """Dense index of ``m`` among the ``4(n+1)`` reachable modes at step ``n``.

    Raises
    ------
    ValueError
        If ``m.q`` is not reachable at step ``n``.
    """
    if not is_reachable(n, m.q):
        raise ValueError(f"mode {m} is not reachable at step {n}")
    return 4 * ((m.q + n) // 2) + m.coin_slot


def mode_from_index(index: int, n: int) -> ModeLabel:
    if not 0 <= index < mode_count(n):
        raise ValueError(f"index {index} out of range for step {n}")
    slot, coin = divmod(index, 4)
    return ModeLabel.of(-n + 2 * slot, COIN_ORDER[coin])
