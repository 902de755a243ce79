import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from photon_qrw import golden
from photon_qrw.modes import ModeLabel, mode_count, mode_index
from photon_qrw.single import SinglePhotonState, evolve
from photon_qrw.transform import ModeMatrix, build_mode_matrix, verify_heisenberg_table

S = 1 / (4 * math.sqrt(2))


def test_identity_at_zero():
    mm = build_mode_matrix(0)
    np.testing.assert_array_equal(mm.matrix, np.eye(4))


def test_five_step_examples():
    mm = build_mode_matrix(5)
    hx0 = ModeLabel.of(0, "hx")
    assert mm.coefficient(ModeLabel.of(5, "hx"), hx0) == pytest.approx(S, abs=1e-15)
    assert mm.coefficient(ModeLabel.of(3, "hx"), hx0) == pytest.approx(-3 * S, abs=1e-15)


def test_heisenberg_table():
    rep = verify_heisenberg_table()
    assert set(rep.per_input) == {"hx", "hy", "vx", "vy"}
    assert rep.max_deviation <= 1e-12
    assert rep.passed()


def test_perturbed_matrix_detected():
    mm = build_mode_matrix(5)
    bad = mm.matrix.copy()
    bad[mode_index(ModeLabel.of(-1, "vy"), 5), 3] += 1e-6
    rep = verify_heisenberg_table(ModeMatrix(mm.n, mm.start, bad))
    assert rep.per_input["vy"] == pytest.approx(1e-6, rel=1e-6)
    assert rep.per_input["hx"] <= 1e-12
    assert not rep.passed()


def test_heisenberg_is_conjugate_transpose():
    mm = build_mode_matrix(5)
    np.testing.assert_array_equal(mm.heisenberg(), mm.matrix.conj().T)
    # every reference integer reappears, scaled
    for coin, entries in golden.HEISENBERG_5.items():
        col = mm.column(ModeLabel.of(0, coin))
        for (q, c), v in entries.items():
            assert col[mode_index(ModeLabel.of(q, c), 5)] == pytest.approx(v * S, abs=1e-14)


@pytest.mark.parametrize("n", [0, 1, 5, 40, 100])
def test_isometry(n):
    assert build_mode_matrix(n).isometry_defect() < 1e-10


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 6), st.integers(0, 12), st.integers(0, 10_000))
def test_start_offset_matches_evolve(start, n, seed):
    rng = np.random.default_rng(seed)
    v = rng.normal(size=mode_count(start)) + 1j * rng.normal(size=mode_count(start))
    mm = build_mode_matrix(n, start=start)
    assert mm.matrix.shape == (mode_count(start + n), mode_count(start))
    np.testing.assert_allclose(mm.apply(v), evolve(SinglePhotonState(start, v), n).vector, atol=1e-12)


def test_column_equals_evolution_bitwise():
    mm = build_mode_matrix(9)
    for i, coin in enumerate(("hx", "hy", "vx", "vy")):
        np.testing.assert_array_equal(mm.matrix[:, i], evolve(SinglePhotonState.basis(coin), 9).vector)
