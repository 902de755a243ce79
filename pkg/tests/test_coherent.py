import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from photon_qrw import golden
from photon_qrw.coherent import (
    CoherentField,
    coherent_joint_detection,
    evolve_coherent,
    normalized_detection,
    weak_field_distribution_exact,
)
from photon_qrw.modes import ModeLabel, reachable_sites
from photon_qrw.tables import check_table

S = 1 / (4 * math.sqrt(2))
amps = st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False)


def test_zero_steps_unchanged():
    f = CoherentField.two_port(0.3 + 0.1j, -0.2)
    assert evolve_coherent(f, 0).amplitudes == f.amplitudes


def test_output_examples():
    a, b = 0.7 - 0.2j, -0.4 + 0.9j
    f = evolve_coherent(CoherentField.two_port(a, b), 5)
    assert f.amplitude(ModeLabel.of(-5, "vx")) == pytest.approx((a + b) * S, abs=1e-14)
    assert f.amplitude(ModeLabel.of(3, "hx")) == pytest.approx((-3 * a + b) * S, abs=1e-14)


def test_all_sixteen_output_amplitudes():
    rng = np.random.default_rng(5)
    for _ in range(10):
        a, b = rng.normal(size=2) + 1j * rng.normal(size=2)
        out = evolve_coherent(CoherentField.two_port(a, b), 5).amplitudes
        assert len(golden.COHERENT_OUTPUT_5) == 16
        for m, v in out.items():
            ca, cb = golden.COHERENT_OUTPUT_5.get((m.q, m.coin), (0, 0))
            assert abs(v - (ca * a + cb * b) * S) <= 1e-12


def test_table_ii_examples():
    d = weak_field_distribution_exact(1, 1, 5)
    assert (d[-5], d[-1], d[5]) == (Fraction(1, 16), Fraction(3, 8), 0)
    assert weak_field_distribution_exact(1, 0, 5)[3] == Fraction(11, 32)
    d = weak_field_distribution_exact(1, -1, 5)
    assert (d[-5], d[3]) == (0, Fraction(3, 8))
    for c in check_table("II"):
        assert c.passed, c


@settings(max_examples=30, deadline=None)
@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(0, 12),
       st.floats(1e-3, 10, allow_nan=False))
def test_rational_route_matches_float(a, b, n, f):
    if a == 0 and b == 0:
        return
    exact = weak_field_distribution_exact(a, b, n)
    approx = normalized_detection(evolve_coherent(CoherentField.two_port(a * f, b * f), n))
    assert sum(exact.values()) == 1
    for q in reachable_sites(n):
        assert approx[q] == pytest.approx(float(exact[q]), abs=1e-12)


def test_zero_field_rejected():
    with pytest.raises(ValueError):
        normalized_detection(CoherentField.two_port(0, 0))
    with pytest.raises(ValueError):
        weak_field_distribution_exact(0, 0, 3)


@settings(max_examples=30, deadline=None)
@given(amps, amps, st.integers(0, 60))
def test_mean_photon_number_conserved(a, b, n):
    f = CoherentField.two_port(a, b)
    assert evolve_coherent(f, n).mean_photon_number() == pytest.approx(abs(a) ** 2 + abs(b) ** 2, abs=1e-10)


@settings(max_examples=30, deadline=None)
@given(amps, amps, st.integers(1, 15))
def test_product_state_has_no_correlation(a, b, n):
    f = evolve_coherent(CoherentField.two_port(a, b), n)
    sites = list(reachable_sites(n))
    for q1 in sites:
        for q2 in sites:
            if q1 != q2:
                assert abs(coherent_joint_detection(f, q1, q2)["sigma"]) <= 1e-12


def test_weak_field_sigma_example():
    f = evolve_coherent(CoherentField.two_port(0.1, 0.1), 5)
    r = coherent_joint_detection(f, -1, 1)
    assert abs(r["sigma"]) <= 1e-12
    assert r["P12"] == pytest.approx(r["P1"] * r["P2"])


def test_zero_field_detection():
    f = CoherentField.two_port(0, 0)
    r = coherent_joint_detection(f, 0, 0)
    assert r == {"P1": 0.0, "P2": 0.0, "P12": 0.0, "sigma": 0.0}


def test_same_site_is_two_photon_probability():
    f = CoherentField.two_port(1.0, 0.0)
    r = coherent_joint_detection(f, 0, 0)
    assert r["P12"] == pytest.approx(1 - 2 * math.exp(-1))
