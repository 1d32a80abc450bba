import pytest

from brauer_schur.errors import BudgetExceeded, SpecError
from brauer_schur.grid import (
    GridTriple,
    LevelError,
    gap_condition,
    grid_points,
    level_set,
    member,
    minimal_diffs,
    translate,
)

from oracles import grid_set

T = GridTriple((5, 5), (2, 10), (2, 3))


def test_level_set_expansion():
    assert level_set(T, 2).elements == (5, 7, 15, 17, 25, 27)
    assert level_set(GridTriple((1,), (1,), (2,)), 1).elements == (1, 2)


def test_level_set_product_law():
    S = GridTriple((1, 1), (1, 3), (3, 3))
    A = level_set(S, 2)
    assert A.elements == tuple(range(1, 10))
    assert len(A) == 9 == S.level_size(2)


def test_level_set_coordinates():
    A = level_set(T, 2)
    assert A.as_dict()[17] == (1, 1)
    assert 27 in A and 26 not in A


def test_level_set_colex_on_collision():
    # gap condition fails: 0 + 2 == 2 * 1
    S = GridTriple((0, 0), (1, 2), (3, 3))
    A = level_set(S, 2).as_dict()
    assert A[2] == (2, 0)
    assert member(S, 2, 2) == (2, 0)


def test_member():
    assert member(T, 2, 17) == (1, 1)
    assert member(T, 2, 6) is None
    assert member(GridTriple((1, 1), (1, 3), (3, 3)), 2, 9) == (2, 2)
    assert member(T, 1, 4) is None


def test_translate():
    assert translate({1, 4}, 3) == {4, 7}
    assert translate({1, 2}, 0) == {1, 2}
    assert translate({2}, 5) == {7}


def test_gap_condition():
    assert gap_condition((1, 3), (3, 9))
    assert not gap_condition((1, 2), (3, 9))
    assert gap_condition((1,), (3,))
    with pytest.raises(SpecError):
        gap_condition((1, 3), (3,))


def test_minimal_diffs():
    assert minimal_diffs((3, 3, 3)) == [1, 3, 9]
    assert minimal_diffs((3, 9)) == [1, 3]
    assert gap_condition(minimal_diffs((4, 7, 2)), (4, 7, 2))


def test_grid_points_agree_with_oracle():
    assert grid_points(2, (1, 4), (4, 3)) == sorted(grid_set((2, 2), (1, 4), (4, 3), 2))


@pytest.mark.parametrize(
    "args",
    [((1,), (1, 2), (2, 2)), ((-1,), (1,), (2,)), ((0,), (0,), (2,)), ((0,), (1,), (1,)), ((0, 0), (1, 3), (3, 2))],
)
def test_triple_validation(args):
    with pytest.raises(SpecError):
        GridTriple(*args)


def test_level_bounds():
    with pytest.raises(LevelError):
        level_set(T, 3)
    with pytest.raises(IndexError):
        member(T, 0, 5)


def test_enumeration_limit():
    big = GridTriple((0,) * 3, (1, 100, 10_000), (100, 100, 100))
    with pytest.raises(BudgetExceeded):
        level_set(big, 3, limit=1000)


def test_json_round_trip():
    data = T.to_json()
    assert data == {"bases": ["5", "5"], "diffs": ["2", "10"], "lengths": ["2", "3"]}
    assert GridTriple.from_json(data) == T
    with pytest.raises(SpecError):
        GridTriple.from_json({"bases": ["x"]})


def test_truncate():
    assert T.truncate(1) == GridTriple((5,), (2,), (2,))
