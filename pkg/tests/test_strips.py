from itertools import combinations_with_replacement

import pytest

from parkvol.combinatorics import beta, subset_of_avector
from parkvol.parking import enumerate_a_parking
from parkvol.strips import (
    Direction,
    FilledStrip,
    FixedPoint,
    InvalidStrip,
    assigned_direction,
    enumerate_strips,
    fixed_points,
    is_bottom_fixed_point,
    moveable,
    moveable_cells,
    parking_of_strip,
    psi,
    s_statistic,
    strip_of_parking,
    verify_involution_theorem,
)

FIGURE_A = (3, 3, 6, 7, 7, 7, 8)
FIGURE_B = (5, 7, 2, 5, 1, 5, 2)


@pytest.fixture
def figure():
    return strip_of_parking(FIGURE_B, FIGURE_A)


def test_figure_strip(figure):
    assert figure.row == (7, 5, 5, 5, 2, 2, 1)
    # row 2 is even, so it reads decreasing: 7 then 3
    assert figure.fill == (2, 1, 4, 6, 7, 3, 5)
    assert figure.problems() == []
    assert s_statistic(figure) == 20
    assert parking_of_strip(figure) == FIGURE_B


def test_figure_fill_in_other_order_is_improper():
    bad = FilledStrip(FIGURE_A, (7, 5, 5, 5, 2, 2, 1), (2, 1, 4, 6, 3, 7, 5))
    assert bad.problems()
    with pytest.raises(InvalidStrip):
        bad.validate()


def test_small_strips():
    H = strip_of_parking((1, 1, 1, 1), (1, 2, 3, 4))
    assert H.row == (1, 1, 1, 1) and H.fill == (1, 2, 3, 4)
    assert parking_of_strip(H) == (1, 1, 1, 1)
    assert s_statistic(H) == 0
    H = strip_of_parking((1, 2), (1, 2))
    assert H.row == (2, 1) and H.fill == (2, 1)
    assert parking_of_strip(H) == (1, 2)
    assert s_statistic(H) == 1


def test_assigned_directions(figure):
    assert assigned_direction(figure, 7) is Direction.DOWN
    assert assigned_direction(figure, 3) is Direction.DOWN
    assert assigned_direction(figure, 4) is Direction.DOWN
    H = strip_of_parking((1, 1, 1), (1, 2, 3))
    assert assigned_direction(H, 3) is Direction.DOWN


def test_figure_moveable_cells(figure):
    assert moveable(figure, 7) is None
    assert moveable(figure, 3) is None
    assert moveable_cells(figure) == {1: Direction.UP, 2: Direction.DOWN, 5: Direction.DOWN, 6: Direction.UP}


def test_figure_psi(figure):
    H2 = psi(figure)
    assert H2.row == (7, 5, 5, 5, 2, 1, 1)
    assert H2.fill == figure.fill
    assert H2.problems() == []
    assert abs(s_statistic(H2) - s_statistic(figure)) == 1
    assert psi(H2) == figure


def test_psi_on_all_row_one_strip():
    a = (2, 2)
    H = strip_of_parking((1, 1), a)
    H2 = psi(H)
    assert H2.problems() == []
    assert s_statistic(H2) == 1
    assert psi(H2) == H


def test_psi_on_fixed_point_raises():
    H = strip_of_parking((1, 1, 1), (1, 1, 1))
    with pytest.raises(FixedPoint):
        psi(H)


def test_fixed_point_examples():
    assert list(fixed_points((2, 2))) == []
    only = list(fixed_points((1, 1, 1)))
    assert len(only) == 1 and only[0].row == (1, 1, 1)
    assert len(list(fixed_points((1, 2, 3, 4)))) == 5


@pytest.mark.parametrize("n", range(1, 7))
def test_bijection(n):
    for a in combinations_with_replacement(range(1, n + 1), n):
        if n == 6 and a[-1] > 4:
            continue
        for b in enumerate_a_parking(a):
            H = strip_of_parking(b, a)
            assert H.problems() == []
            assert parking_of_strip(H) == b
            assert strip_of_parking(parking_of_strip(H), a) == H
            assert s_statistic(H) == sum(b) - n


@pytest.mark.parametrize("n", range(1, 5))
def test_involution_exhaustive(n):
    for a in combinations_with_replacement(range(1, n + 2), n):
        rep = verify_involution_theorem(a)
        assert rep.ok, rep.failures
        assert rep.strips == rep.fixed + 2 * rep.pairs


def test_involution_examples():
    rep = verify_involution_theorem((1, 2, 3, 4))
    assert (rep.signed_sum, rep.fixed) == (5, 5)
    assert verify_involution_theorem((2, 2)).signed_sum == 0
    rep = verify_involution_theorem((1,))
    assert (rep.signed_sum, rep.fixed, rep.pairs) == (1, 1, 0)


def test_fixed_points_are_bottom_fillings():
    for a in [(1, 2, 3, 4, 5), (1, 3, 3, 4), (3, 3, 5, 5)]:
        fps = list(fixed_points(a))
        assert len(fps) == beta(len(a), subset_of_avector(a))
        assert all(is_bottom_fixed_point(H) for H in fps)


def test_strip_count_matches_parking():
    a = (1, 2, 2, 4)
    assert sum(1 for _ in enumerate_strips(a)) == sum(1 for _ in enumerate_a_parking(a))
