from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tightsurf.exact import vec
from tightsurf.hull import (
    duplicate_points, extreme_points, hull_skeleton, is_hull_edge, is_in_hull,
    on_segment, supporting_functional,
)

SQUARE = [vec(0, 0), vec(1, 0), vec(1, 1), vec(0, 1)]


def test_square_skeleton():
    sk = hull_skeleton(SQUARE)
    assert sk.extreme_vertices == frozenset(range(4))
    assert sk.edges == {frozenset(e) for e in ((0, 1), (1, 2), (2, 3), (3, 0))}


def test_diagonal_is_not_an_edge():
    assert not is_hull_edge(0, 2, SQUARE)
    assert supporting_functional(0, 2, SQUARE) is None


def test_interior_point_not_extreme():
    pts = SQUARE + [vec("1/2", "1/2")]
    assert extreme_points(pts) == frozenset(range(4))
    with pytest.raises(ValueError):
        is_hull_edge(0, 4, pts)


def test_point_on_edge_does_not_break_it():
    pts = SQUARE + [vec("1/2", 0)]
    sk = hull_skeleton(pts)
    assert frozenset((0, 1)) in sk.edges
    assert 4 not in sk.extreme_vertices


def test_duplicates_are_never_extreme():
    pts = SQUARE + [vec(0, 0)]
    assert extreme_points(pts) == frozenset({1, 2, 3})
    assert duplicate_points(pts) == [(0, 4)]


def test_simplex_skeleton_is_complete():
    n = 5
    pts = [tuple(Fraction(0) for _ in range(n))] + [
        tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)
    ]
    sk = hull_skeleton(pts)
    assert len(sk.edges) == (n + 1) * n // 2


def test_octahedron_skeleton():
    pts = []
    for i in range(3):
        for s in (1, -1):
            pts.append(tuple(Fraction(s * (i == j)) for j in range(3)))
    sk = hull_skeleton(pts)
    assert len(sk.edges) == 12
    assert not is_hull_edge(0, 1, pts)  # antipodal


def test_membership_boundary_counts():
    assert is_in_hull(vec("1/2", 0), SQUARE)
    assert not is_in_hull(vec(2, 0), SQUARE)


def test_on_segment():
    assert on_segment(vec(1, 1), vec(0, 0), vec(2, 2))
    assert not on_segment(vec(3, 3), vec(0, 0), vec(2, 2))
    assert not on_segment(vec(1, 0), vec(0, 0), vec(2, 2))


small = st.integers(-6, 6)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(small, small), min_size=3, max_size=7, unique=True))
def test_hull_of_extremes_contains_everything(raw):
    pts = [vec(*p) for p in raw]
    ext = extreme_points(pts)
    hull = [pts[i] for i in sorted(ext)]
    assert all(is_in_hull(p, hull) for p in pts)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(small, small), min_size=3, max_size=7, unique=True),
       st.integers(1, 4), st.integers(-5, 5), st.integers(-5, 5))
def test_skeleton_translation_and_scaling(raw, k, dx, dy):
    pts = [vec(*p) for p in raw]
    moved = [(k * x + dx, k * y + dy) for x, y in pts]
    moved = [vec(*p) for p in moved]
    assert hull_skeleton(pts) == hull_skeleton(moved)
