import pytest
from hypothesis import given, settings, strategies as st

from brauer_schur.coloring import (
    Constant,
    FromFile,
    Periodic,
    SeededRandom,
    Table,
    color_of,
    colors,
    make_coloring,
    parse_coloring,
    splitmix_color,
)
from brauer_schur.errors import SpecError, SupportExhausted

from oracles import splitmix_numpy


def test_constant():
    assert Constant(1)(7) == 1
    assert color_of(Constant(2), 10) == 2


def test_periodic_wraps():
    assert Periodic([1, 2])(5) == 1
    assert Periodic([1, 2, 3])(4) == 1
    assert Periodic([1, 2]).period == 2


def test_seeded_random_first_value():
    # frozen from the numpy uint64 oracle
    assert SeededRandom(0, 2)(1) == 2
    assert splitmix_numpy(0, 1, 2) == 2


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**64 - 1), st.integers(1, 2**40), st.integers(1, 7))
def test_splitmix_matches_numpy(seed, n, c):
    assert splitmix_color(seed, n, c) == splitmix_numpy(seed, n, c)


def test_from_file_support(tmp_path):
    p = tmp_path / "chi.txt"
    p.write_text("1 2 2\n1 1")
    chi = FromFile(p, 2)
    assert colors(chi, [1, 2, 3, 4, 5]) == (1, 2, 2, 1, 1)
    with pytest.raises(SupportExhausted) as err:
        chi(6)
    assert err.value.n == 6


def test_nonpositive_query_rejected():
    with pytest.raises(SpecError):
        Constant(1)(0)


@pytest.mark.parametrize(
    "text, n, expected",
    [("const:3", 4, 3), ("periodic:1,2,3", 5, 2), ("table:2,1", 2, 1)],
)
def test_parse(text, n, expected):
    assert parse_coloring(text)(n) == expected


def test_parse_rand_and_file(tmp_path):
    assert parse_coloring("rand:5:3")(9) == splitmix_color(5, 9, 3)
    p = tmp_path / "c.txt"
    p.write_text("2 1")
    chi = parse_coloring(f"file:{p}:2")
    assert chi(1) == 2 and chi.palette_size == 2


@pytest.mark.parametrize("bad", ["", "const:", "periodic:", "rand:1", "blue:1", "periodic:1,x"])
def test_parse_errors(bad):
    with pytest.raises(SpecError):
        parse_coloring(bad)


def test_palette_checks():
    with pytest.raises(SpecError):
        Periodic([1, 3], palette_size=2)
    with pytest.raises(SpecError):
        Table([0, 1], 2)
    with pytest.raises(SpecError):
        SeededRandom(-1, 2)


def test_make_coloring_passthrough():
    chi = Periodic([2, 1])
    assert make_coloring(chi) is chi
    assert make_coloring("const:1")(3) == 1
