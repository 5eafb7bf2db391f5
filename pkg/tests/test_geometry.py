"""Exact geometric primitives."""

from fractions import Fraction

import pytest

from shellcert.geometry import (angle_less, ccw_sign, on_segment,
                                polygon_area2, segment_intersection,
                                sort_by_angle, winding_number)


def test_ccw_sign():
    assert ccw_sign((0, 0), (1, 0), (0, 1)) == 1
    assert ccw_sign((0, 0), (0, 1), (1, 0)) == -1
    assert ccw_sign((0, 0), (1, 1), (2, 2)) == 0


def test_proper_crossing_is_exact():
    kind, x, t, u = segment_intersection((0, 0), (4, 4), (0, 4), (4, 0))
    assert kind == "point"
    assert x == (2, 2)
    assert t == Fraction(1, 2) and u == Fraction(1, 2)


def test_non_integer_crossing_point():
    kind, x, t, u = segment_intersection((0, 0), (3, 1), (1, -1), (1, 5))
    assert kind == "point"
    assert x == (1, Fraction(1, 3))


def test_disjoint_segments():
    assert segment_intersection((0, 0), (1, 0), (0, 1), (1, 1)) is None
    assert segment_intersection((0, 0), (1, 0), (3, 0), (4, 0)) is None


def test_endpoint_touch_reports_point():
    kind, x, _, _ = segment_intersection((0, 0), (2, 2), (2, 2), (5, 0))
    assert kind == "point" and x == (2, 2)


def test_collinear_overlap():
    kind, a, b = segment_intersection((0, 0), (4, 0), (2, 0), (6, 0))
    assert kind == "overlap"
    assert {a, b} == {(2, 0), (4, 0)}


def test_collinear_point_touch():
    res = segment_intersection((0, 0), (2, 0), (2, 0), (6, 0))
    assert res[0] == "point" and res[1] == (2, 0)


def test_on_segment():
    assert on_segment((1, 1), (0, 0), (2, 2))
    assert on_segment((0, 0), (0, 0), (2, 2))
    assert not on_segment((3, 3), (0, 0), (2, 2))
    assert not on_segment((1, 0), (0, 0), (2, 2))


def test_angle_order_counterclockwise():
    dirs = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)]
    shuffled = list(reversed(dirs))
    assert sort_by_angle(shuffled, key=lambda v: v) == dirs
    for a, b in zip(dirs, dirs[1:]):
        assert angle_less(a, b)


def test_angle_order_rejects_ties():
    with pytest.raises(ValueError):
        sort_by_angle([(1, 1), (2, 2)], key=lambda v: v)


def test_winding_number_square():
    square = [(0, 0), (4, 0), (4, 4), (0, 4)]
    assert winding_number((2, 2), square) == 1
    assert winding_number((2, 2), list(reversed(square))) == -1
    assert winding_number((9, 9), square) == 0
    assert polygon_area2(square) == 32
    assert polygon_area2(list(reversed(square))) == -32
