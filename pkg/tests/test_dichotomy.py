import pytest

from brauer_schur.coloring import Constant, Periodic
from brauer_schur.dichotomy import (
    BlockFamily,
    Budgets,
    LengthSchedule,
    brauer_schur,
    case1_assemble,
    case1_search,
    case1_threshold,
    case2_construct,
    dichotomy,
    parse_schedule,
    run_base,
)
from brauer_schur.errors import CoordinateOverflow, IndexExhausted, SpecError
from brauer_schur.grid import GridTriple
from brauer_schur.verify import verify_case2, verify_dset, verify_grid_witness
from brauer_schur.windows import AssumedPlan

K = LengthSchedule.affine(1, 1)  # k_i = i + 1
WINDOWS = AssumedPlan(tuple(2 * (i + 1) ** 2 - 1 for i in range(1, 41)))


def test_schedules():
    assert K.prefix(4) == [2, 3, 4, 5]
    assert K.squared().prefix(3) == [4, 9, 16]
    assert K.first_at_least(9, after=2) == 8
    assert K.squared().first_at_least(10) == 3
    s = parse_schedule("list:2,2,3;affine:1,1")
    assert s.prefix(5) == [2, 2, 3, 5, 6] and s.unbounded
    assert not parse_schedule("affine:0,3").unbounded
    assert not parse_schedule("list:2,3").unbounded


@pytest.mark.parametrize("bad", ["affine:-1,3", "affine:0,1", "list:3,2", "list:1", "affine:1", "cubic:1"])
def test_schedule_errors(bad):
    with pytest.raises(SpecError):
        parse_schedule(bad)


def test_run_base_constant_depth_one():
    base = run_base(Constant(1), 1, 2, K, WINDOWS, depth=1)
    assert base.color == 1
    assert base.c1.lengths == (4,)
    assert base.c2.bases == (0,)


def test_run_base_two_levels():
    chi = Periodic([1, 2])
    base = run_base(chi, 1, 2, K, WINDOWS, depth=2, horizon=4)
    assert len(base.dstar) == 2
    assert verify_grid_witness(chi, base.c1, base.color).ok


def test_case1_singletons_for_constant():
    fam = case1_search(Constant(1), (1, 2, 3, 4), (2, 3, 4, 5), 1, R=3, H=4, s=1)
    assert fam.blocks == ((1,), (2,), (3,))
    assert fam.coefficients == ((1,), (1,), (1,))


def test_case1_absent_when_target_missing():
    assert case1_search(Constant(1), (1, 2, 3), (2, 3, 4), 2, R=1, H=3, s=1) is None
    assert case1_threshold(Constant(1), (1, 2, 3), (2, 3, 4), 2, 3, 1) == 1


def test_case1_parity():
    chi = Periodic([1, 2])
    fam = case1_search(chi, (2, 4, 6), (2, 3, 4), 2, R=2, H=3, s=2)
    assert fam.blocks == ((1,), (2,))


def test_case1_assemble_sums():
    dstar = (3, 5, 7)
    c1 = GridTriple((10, 20, 30), dstar, (4, 9, 16))
    lengths = (2, 3, 4)
    w = case1_assemble(BlockFamily(((1,),), ((1,),)), c1, dstar, lengths)
    assert w.dset == (3,)
    w = case1_assemble(BlockFamily(((1,), (2, 3)), ((1,), (1, 1))), c1, dstar, lengths)
    assert w.dset == (3, 12)
    assert w.triple.bases == (10, 30)
    assert BlockFamily(((1,),), ((2,),)).sums(dstar) == (6,)
    assert BlockFamily(((1,), (2, 3)), ((2,), (1, 1))).sums(dstar) == (6, 12)


def test_case1_assemble_coordinate_guard():
    dstar = (3, 5)
    c1 = GridTriple((1, 1), dstar, (4, 9))
    with pytest.raises(CoordinateOverflow):
        case1_assemble(BlockFamily(((1,),), ((5,),)), c1, dstar, (2, 3))


def test_case2_geometric():
    dstar = tuple(3**i for i in range(1, 12))
    w = case2_construct(dstar, K, (3, 9), 1, 2, forbidden=2)
    assert [(s.m, s.t, s.l) for s in w.trace] == [(2, 0, 9), (8, 0, 6561)]
    assert w.base == 3
    assert w.newdiffs == (9, 6561)


def test_case2_linear():
    dstar = tuple(range(1, 12))
    w = case2_construct(dstar, K, (3, 9), 1, 2)
    assert [(s.m, s.t, s.l) for s in w.trace] == [(2, 0, 2), (8, 0, 8)]


def test_case2_depth_one_and_padding():
    w = case2_construct((1, 1, 1, 1, 1, 1), K, (3,), 1, 1)
    assert w.trace[0].t == 0 and w.newdiffs == (1,)
    # equal differences force t_2 > 0
    w = case2_construct((1,) * 20, K, (3, 3), 1, 2)
    assert w.trace[1].t == 2 and w.newdiffs == (1, 3)


def test_case2_index_exhausted():
    with pytest.raises(IndexExhausted):
        case2_construct((1, 2, 3), K, (3, 9), 1, 2)


def test_dichotomy_constant_case1():
    out = dichotomy(Constant(1), 2, K, WINDOWS, Budgets(depth=2, index_horizon=12))
    assert out.case == 1
    w = out.witness
    assert verify_grid_witness(Constant(1), w.triple, 1).ok
    assert verify_dset(Constant(1), w.dset, 1).ok


def test_dichotomy_single_color():
    out = dichotomy(Constant(1), 1, K, WINDOWS, Budgets(depth=2))
    assert out.case == 1


def test_dichotomy_periodic_case2():
    chi = Periodic([1, 2])
    out = dichotomy(chi, 2, K, WINDOWS, Budgets(depth=2, index_horizon=12))
    assert out.case == 2
    assert verify_case2(chi, out.witness, 2).ok


def test_brauer_schur_periodic():
    chi = Periodic([1, 2])
    w = brauer_schur(chi, 2, K, WINDOWS, Budgets(depth=2, index_horizon=4))
    assert len(w.rounds) <= 2
    assert verify_grid_witness(chi, w.triple, w.color).ok
    assert verify_dset(chi, w.dset, w.color).ok


def test_brauer_schur_constant():
    w = brauer_schur(Constant(2, 3), 3, K, WINDOWS, Budgets(depth=2))
    assert w.color == 2


def test_brauer_schur_needs_growth():
    with pytest.raises(SpecError):
        brauer_schur(Constant(1), 2, parse_schedule("affine:0,3"), WINDOWS, Budgets())
