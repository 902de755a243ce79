import pytest
from hypothesis import given, strategies as st

from photon_qrw.modes import (
    COIN_ORDER,
    Direction,
    ModeLabel,
    Polarization,
    is_reachable,
    mode_count,
    mode_from_index,
    mode_index,
    parse_mode,
    reachable_modes,
    reachable_sites,
)


def test_reachability_examples():
    assert is_reachable(0, 0)
    assert not is_reachable(5, 4)
    assert is_reachable(5, -5)
    assert not is_reachable(5, 7)


def test_negative_steps_rejected():
    with pytest.raises(ValueError):
        is_reachable(-1, 0)


@pytest.mark.parametrize(
    "n, mode, expected",
    [
        (0, ModeLabel(0, Direction.h, Polarization.x), 0),
        (0, ModeLabel(0, Direction.v, Polarization.y), 3),
        (2, ModeLabel(2, Direction.v, Polarization.y), 11),
    ],
)
def test_mode_index_examples(n, mode, expected):
    assert mode_index(mode, n) == expected


def test_mode_index_rejects_unreachable():
    with pytest.raises(ValueError):
        mode_index(ModeLabel.of(1, "hx"), 2)
    with pytest.raises(ValueError):
        mode_index(ModeLabel.of(4, "hx"), 2)


def test_render_and_parse():
    m = ModeLabel.of(-3, "vx")
    assert str(m) == "(-3,v,x)"
    assert parse_mode("(-3,v,x)") == m
    assert parse_mode("( 5 , h , y )") == ModeLabel.of(5, "hy")
    with pytest.raises(ValueError):
        parse_mode("(1,z,x)")


def test_canonical_order():
    modes = reachable_modes(1)
    assert [str(m) for m in modes[:4]] == ["(-1,h,x)", "(-1,h,y)", "(-1,v,x)", "(-1,v,y)"]
    assert [m.coin for m in modes[:4]] == list(COIN_ORDER)
    assert modes == sorted(modes)


@given(st.integers(0, 60))
def test_index_roundtrip(n):
    modes = reachable_modes(n)
    assert len(modes) == mode_count(n) == 4 * (n + 1)
    assert [mode_index(m, n) for m in modes] == list(range(mode_count(n)))
    assert all(mode_from_index(i, n) == m for i, m in enumerate(modes))
    assert list(reachable_sites(n)) == [q for q in range(-n, n + 1) if is_reachable(n, q)]


@given(st.integers(-20, 20), st.sampled_from(COIN_ORDER))
def test_mirror_is_involution(q, coin):
    m = ModeLabel.of(q, coin)
    assert m.mirrored().mirrored() == m
    assert m.mirrored().q == -q
    assert m.mirrored().pol == m.pol
    assert m.mirrored().dir != m.dir
