"""Convex-hull queries over small rational point sets.

No facet enumeration: every question is one exact LP.  Fine for a dozen
points in dimension up to ten or so.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exact import (
    EQ,
    LE,
    LinearSystem,
    RatVector,
    convex_weights,
    lp_feasible,
    sub,
)


@dataclass(frozen=True)
class HullSkeleton:
    extreme_vertices: frozenset
    edges: frozenset  # of frozenset({i, j})

    def adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in self.extreme_vertices}
        for e in self.edges:
            i, j = tuple(e)
            adj[i].add(j)
            adj[j].add(i)
        return adj


def _check_dims(points: Sequence[RatVector], n: int | None = None):
    if not points:
        return
    n = len(points[0]) if n is None else n
    if any(len(p) != n for p in points):
        raise ValueError("dimension mismatch")


def is_in_hull(p: RatVector, points: Sequence[RatVector]) -> bool:
    """True iff ``p`` is a convex combination of ``points`` (boundary included)."""
    _check_dims(points, len(p))
    return convex_weights(p, points) is not None


def extreme_points(points: Sequence[RatVector]) -> frozenset:
    """Indices ``i`` with ``points[i]`` outside the hull of all other entries.

    A point listed twice is inside the hull of its own copy, so neither
    copy is reported.
    """
    if not points:
        raise ValueError("no points")
    _check_dims(points)
    out = set()
    for i, p in enumerate(points):
        others = [q for k, q in enumerate(points) if k != i]
        if not others or not is_in_hull(p, others):
            out.add(i)
    return frozenset(out)


def on_segment(p: RatVector, a: RatVector, b: RatVector) -> bool:
    """Closed segment membership, exact."""
    d = sub(b, a)
    w = sub(p, a)
    k = next((i for i, x in enumerate(d) if x != 0), None)
    if k is None:
        return p == a
    t = w[k] / d[k]
    if not 0 <= t <= 1:
        return False
    return all(w[i] == t * d[i] for i in range(len(d)))


def segment_parameter(p: RatVector, a: RatVector, b: RatVector):
    """``t`` with ``p = a + t (b - a)``, assuming ``p`` is on the line."""
    d = sub(b, a)
    k = next(i for i, x in enumerate(d) if x != 0)
    return (p[k] - a[k]) / d[k]


def _supporting_system(i, j, points):
    p_i, p_j = points[i], points[j]
    n = len(p_i)
    cons = [(sub(p_j, p_i), EQ, 0)]
    for k, q in enumerate(points):
        if k in (i, j) or on_segment(q, p_i, p_j):
            continue
        # c.(q - p_i) < 0, homogeneous so scale to <= -1
        cons.append((sub(q, p_i), LE, -1))
    return LinearSystem(n, tuple(cons))


def is_hull_edge(i: int, j: int, points: Sequence[RatVector], extremes=None) -> bool:
    """True iff ``[points[i], points[j]]`` is a 1-dimensional face of the hull.

    Looks for a linear functional constant on the segment and strictly
    smaller at every input point off the segment.  Points lying on the
    segment (subdivision vertices) are exempt.
    """
    if i == j:
        raise ValueError("need two distinct indices")
    _check_dims(points)
    if extremes is None:
        extremes = extreme_points(points)
    for k in (i, j):
        if k not in extremes:
            raise ValueError(f"point {k} is not an extreme point")
    ok, _ = lp_feasible(_supporting_system(i, j, points))
    return ok


def supporting_functional(i: int, j: int, points: Sequence[RatVector]) -> RatVector | None:
    ok, c = lp_feasible(_supporting_system(i, j, points))
    return c if ok else None


def hull_skeleton(points: Sequence[RatVector]) -> HullSkeleton:
    ext = extreme_points(points)
    order = sorted(ext)
    edges = set()
    for a, i in enumerate(order):
        for j in order[a + 1:]:
            if is_hull_edge(i, j, points, ext):
                edges.add(frozenset((i, j)))
    return HullSkeleton(ext, frozenset(edges))


def duplicate_points(points: Sequence[RatVector]) -> list[tuple[int, int]]:
    seen: dict = {}
    dups = []
    for i, p in enumerate(points):
        if p in seen:
            dups.append((seen[p], i))
        else:
            seen[p] = i
    return dups
