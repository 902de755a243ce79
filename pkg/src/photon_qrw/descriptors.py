"""Parsing of the short initial-state descriptors used on the command line."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .modes import COIN_ORDER
from .single import CoinState
from .two_photon import STANDARD_INPUTS

__all__ = [
    "DescriptorError",
    "SingleDescriptor",
    "TwoPhotonDescriptor",
    "CoherentDescriptor",
    "parse_initial",
]


class DescriptorError(ValueError):
    pass


@dataclass(frozen=True)
class SingleDescriptor:
    text: str
    coin: CoinState


@dataclass(frozen=True)
class TwoPhotonDescriptor:
    text: str
    kind: str


@dataclass(frozen=True)
class CoherentDescriptor:
    text: str
    alpha: complex
    beta: complex


_SUPERPOSITION = re.compile(r"^(hx|hy|vx|vy)([+-])(hx|hy|vx|vy)(?:_(plus|minus))?$")


def _complex_literal(token: str, whole: str) -> complex:
    t = token.strip().replace(" ", "")
    if not t:
        raise DescriptorError(f"empty amplitude in {whole!r}")
    if t.endswith("i"):
        t = t[:-1] + "j"
    try:
        return complex(t)
    except ValueError:
        raise DescriptorError(f"cannot read complex amplitude {token!r} in {whole!r}") from None


def parse_initial(descriptor: str) -> SingleDescriptor | TwoPhotonDescriptor | CoherentDescriptor:
    """Parse an initial-state descriptor.

    Accepted forms:

    * single photon: ``hx``, ``hy``, ``vx``, ``vy`` or two coins joined by
      ``+``/``-`` such as ``hx-vy`` (normalized by ``1/sqrt2``); an optional
      ``_plus``/``_minus`` suffix must agree with the sign
    * two photons: ``xx``, ``xy``, ``yx``, ``yy``, ``psi+``, ``psi-``,
      ``phi+``, ``phi-``
    * coherent pair: ``coh:ALPHA,BETA`` with Python complex literals
      (``i`` is accepted for ``j``)
    """
    text = descriptor.strip()
    if not text:
        raise DescriptorError("empty initial-state descriptor")
    if text in COIN_ORDER:
        return SingleDescriptor(text, CoinState.from_mapping({text: 1.0}))
    if text in STANDARD_INPUTS:
        return TwoPhotonDescriptor(text, text)
    if text.startswith("coh:"):
        parts = text[4:].split(",")
        if len(parts) != 2:
            raise DescriptorError(f"coherent descriptor needs two amplitudes 'coh:ALPHA,BETA', got {text!r}")
        alpha, beta = (_complex_literal(p, text) for p in parts)
        return CoherentDescriptor(text, alpha, beta)
    m = _SUPERPOSITION.match(text)
    if m:
        first, op, second, suffix = m.groups()
        if first == second:
            raise DescriptorError(f"superposition needs two different coin states, got {text!r}")
        if suffix is not None and (suffix == "plus") != (op == "+"):
            raise DescriptorError(f"suffix '_{suffix}' contradicts operator '{op}' in {text!r}")
        sign = 1.0 if op == "+" else -1.0
        return SingleDescriptor(text, CoinState.from_mapping({first: 1.0, second: sign}, normalize=True))
    bad = re.split(r"[+\-:,]", text)[0] or text
    raise DescriptorError(f"unrecognized initial-state token {bad!r} in {text!r}")
