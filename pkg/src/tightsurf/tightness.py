"""Certification of 0-tightness and tightness for polyhedral embeddings.

The skeleton-based checkers are the certified route.  ``tpp_oracle`` is an
independent brute-force check of the two-piece property used to
cross-validate them; it samples half-spaces and so can only ever refute.

Tightness for p >= 1 is never computed homologically.  For surfaces with
boundary it is decided as "0-tight and every extreme point of the hull is
a boundary vertex"; for closed surfaces 0-tightness already implies
tightness.  Embeddings are affine; nothing here handles points at infinity.
"""
from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .chromatic import ClosedSurfaceId, relative_chromatic
from .complex import Embedding, check_face_shape
from .exact import RatVector, affine_rank, dot, nullspace, sub
from .graphs import Graph, has_complete_subdivision
from .hull import HullSkeleton, hull_skeleton, is_in_hull, on_segment, segment_parameter

DEFAULT_SEED = 20140301
DEFAULT_RANDOM_NORMALS = 200
ORACLE_MAX_VERTICES = 12
ORACLE_MAX_DIM = 7


def oracle_seed() -> int:
    env = os.environ.get("TIGHTSURF_SEED")
    return int(env) if env else DEFAULT_SEED


@dataclass
class TightnessVerdict:
    substantial: bool
    zero_tight: bool
    tight: bool
    witnesses: list = field(default_factory=list)
    skeleton: HullSkeleton | None = None
    boundary_vertices: frozenset = frozenset()
    covers: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.tight and not self.zero_tight:
            raise ValueError("tight implies zero-tight")


def _cover_chain(i, j, points, adj):
    """Vertices along hull edge [i, j] if graph edges cover it, else None."""
    a, b = points[i], points[j]
    on = [v for v, p in enumerate(points) if on_segment(p, a, b)]
    t = {v: segment_parameter(points[v], a, b) for v in on}
    spans = []
    for u in on:
        for v in adj[u]:
            if v in t and u < v:
                lo, hi = sorted((t[u], t[v]))
                spans.append((lo, hi))
    spans.sort()
    reach = Fraction(0)
    for lo, hi in spans:
        if lo > reach:
            break
        reach = max(reach, hi)
    if reach < 1:
        return None
    return tuple(sorted(on, key=lambda v: t[v]))


def _zero_tight_graph(points, adj, skel):
    failures = []
    covers = {}
    for e in sorted(tuple(sorted(x)) for x in skel.edges):
        chain = _cover_chain(e[0], e[1], points, adj)
        if chain is None:
            failures.append({"kind": "missing_hull_edge", "edge": list(e)})
        else:
            covers[e] = chain
    for v in range(len(points)):
        if v in skel.extreme_vertices:
            continue
        nb = [points[u] for u in sorted(adj[v])]
        if not nb or not is_in_hull(points[v], nb):
            failures.append({"kind": "outside_neighbour_hull", "vertex": v})
    return failures, covers


def _check_distinct(points):
    seen = {}
    for v, p in enumerate(points):
        if p in seen:
            raise ValueError(f"vertices {seen[p]} and {v} coincide")
        seen[p] = v


def is_zero_tight_graph(vertices: Sequence[RatVector], edges) -> tuple[bool, list]:
    """Straight-line graph 0-tightness: hull skeleton covered by graph
    segments, and each non-extreme vertex inside the hull of its neighbours."""
    points = [tuple(p) for p in vertices]
    _check_distinct(points)
    adj = [set() for _ in points]
    for e in edges:
        u, v = tuple(e)
        adj[u].add(v)
        adj[v].add(u)
    failures, _ = _zero_tight_graph(points, adj, hull_skeleton(points))
    return not failures, failures


def _surface_adjacency(e: Embedding):
    adj = [set() for _ in range(e.surface.num_vertices)]
    for u, v in e.surface.edges():
        adj[u].add(v)
        adj[v].add(u)
    return adj


def is_zero_tight_surface(e: Embedding) -> tuple[bool, list]:
    """0-tightness of a surface with convex faces, decided on its 1-skeleton."""
    for i in range(len(e.surface.faces)):
        check_face_shape(e, i)
    return is_zero_tight_graph(e.coords, [set(x) for x in e.surface.edges()])


def is_tight_surface(e: Embedding) -> TightnessVerdict:
    points = list(e.coords)
    _check_distinct(points)
    for i in range(len(e.surface.faces)):
        check_face_shape(e, i)
    substantial = affine_rank(points) == e.dimension
    skel = hull_skeleton(points)
    failures, covers = _zero_tight_graph(points, _surface_adjacency(e), skel)
    zero_tight = not failures
    bverts = frozenset(v for x in e.surface.boundary_edges() for v in x)
    witnesses = list(failures)
    if bverts:
        interior_extremes = sorted(v for v in skel.extreme_vertices if v not in bverts)
        for v in interior_extremes:
            witnesses.append({"kind": "interior_extreme_point", "vertex": v})
        tight = zero_tight and not interior_extremes
    else:
        tight = zero_tight
    if not substantial:
        witnesses.append({"kind": "not_substantial", "affine_rank": affine_rank(points)})
    return TightnessVerdict(substantial, zero_tight, tight, witnesses, skel, bverts, covers)


# -- brute-force two-piece-property oracle ---------------------------------

def _primitive(c: RatVector) -> tuple[int, ...]:
    """Integer normal with gcd 1 and positive leading entry (direction only)."""
    from math import gcd, lcm

    den = 1
    for x in c:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in c]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    return tuple(-x for x in ints) if lead < 0 else tuple(ints)


def candidate_normals(points: Sequence[RatVector], n_random: int, seed: int) -> list[tuple[int, ...]]:
    n = len(points[0])
    normals = set()
    for sub_idx in combinations(range(len(points)), n):
        base = points[sub_idx[0]]
        diffs = [sub(points[k], base) for k in sub_idx[1:]]
        ns = nullspace(diffs, n) if diffs else None
        if ns is not None and len(ns) == 1:
            normals.add(_primitive(ns[0]))
    for k in range(n):
        normals.add(tuple(int(i == k) for i in range(n)))
    rng = random.Random(seed)
    for _ in range(n_random):
        while True:
            c = tuple(rng.randint(-12, 12) for _ in range(n))
            if any(c):
                break
        normals.add(_primitive(tuple(Fraction(x) for x in c)))
    return sorted(normals)


def _components(mask: int, nbr_masks: Sequence[int]) -> int:
    count = 0
    rest = mask
    while rest:
        low = rest & -rest
        frontier = low
        seen = low
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            new = nbr_masks[b.bit_length() - 1] & mask & ~seen
            seen |= new
            frontier |= new
        rest &= ~seen
        count += 1
    return count


def tpp_oracle(
    e: Embedding,
    seed: int | None = None,
    n_random: int = DEFAULT_RANDOM_NORMALS,
    max_vertices: int = ORACLE_MAX_VERTICES,
    max_dim: int = ORACLE_MAX_DIM,
) -> tuple[bool, dict | None]:
    """Sweep open half-spaces and require every intersection to be connected.

    For a convex-faced surface, the piece cut out by an open half-space E
    has one component per class of the graph on the vertices inside E,
    two vertices being joined when they share a face: each face meets E
    in a convex set which is non-empty exactly when one of its vertices
    is in E, and two faces' pieces touch exactly when a common vertex is
    in E.  Normals come from hyperplanes through n vertices, the
    coordinate axes and ``n_random`` seeded random directions; thresholds
    sit strictly between consecutive projection values.
    """
    nv = e.surface.num_vertices
    if nv > max_vertices or e.dimension > max_dim:
        raise ValueError(
            f"oracle limited to {max_vertices} vertices in dimension <= {max_dim}"
        )
    seed = oracle_seed() if seed is None else seed
    points = list(e.coords)
    nbr = [0] * nv
    for f in e.surface.faces:
        m = 0
        for v in f:
            m |= 1 << v
        for v in f:
            nbr[v] |= m
    full = (1 << nv) - 1
    checked: dict[int, int] = {}
    for c in candidate_normals(points, n_random, seed):
        vals = [dot(c, p) for p in points]
        levels = sorted(set(vals))
        for lo, hi in zip(levels, levels[1:]):
            thr = (lo + hi) / 2
            up = 0
            for v in range(nv):
                if vals[v] > thr:
                    up |= 1 << v
            for mask, side in ((up, ">"), (full & ~up, "<")):
                comps = checked.get(mask)
                if comps is None:
                    comps = checked[mask] = _components(mask, nbr)
                if comps > 1:
                    return False, {
                        "normal": list(c),
                        "offset": thr,
                        "side": side,
                        "vertices": [v for v in range(nv) if mask >> v & 1],
                        "components": comps,
                    }
    # the whole surface is the intersection with a far-away half-space
    if _components(full, nbr) > 1:
        return False, {"normal": None, "offset": None, "side": None,
                       "vertices": list(range(nv)), "components": _components(full, nbr)}
    return True, None


# -- the audit of n <= c0 - 1 ----------------------------------------------

@dataclass
class AuditStep:
    step: str
    passed: bool
    detail: object = None


@dataclass
class AuditReport:
    n: int
    c0_lower: int
    c0_upper: int
    c0_exact: int | None
    steps: list
    subdivision: dict | None

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.steps)

    @property
    def failed_step(self):
        return next((s for s in self.steps if not s.passed), None)

    @property
    def sharp(self) -> bool:
        return self.c0_exact is not None and self.n + 1 == self.c0_exact


def theorem1_audit(e: Embedding, s: ClosedSurfaceId, p: int, verdict: TightnessVerdict | None = None) -> AuditReport:
    """Replay the chain hull skeleton -> proper embedding -> K_{n+1}
    subdivision -> n + 1 <= c0 on a concrete embedding."""
    n = e.dimension
    answer = relative_chromatic(s, p)
    verdict = verdict or is_tight_surface(e)
    steps = [AuditStep("pre", verdict.tight and verdict.substantial,
                       {"tight": verdict.tight, "substantial": verdict.substantial})]
    report = AuditReport(n, answer.lower, answer.upper, answer.exact, steps, None)
    if not steps[0].passed:
        return report

    skel = verdict.skeleton
    missing = [sorted(x) for x in skel.edges if tuple(sorted(x)) not in verdict.covers]
    steps.append(AuditStep(
        "a", not missing,
        {"missing": missing} if missing else {"chains": {f"{a}-{b}": list(c) for (a, b), c in sorted(verdict.covers.items())}},
    ))
    off_boundary = sorted(v for v in skel.extreme_vertices if v not in verdict.boundary_vertices)
    if not verdict.boundary_vertices:
        off_boundary = sorted(skel.extreme_vertices)
    steps.append(AuditStep("b", not off_boundary,
                           {"off_boundary": off_boundary} if off_boundary else {"extreme": sorted(skel.extreme_vertices)}))
    g = Graph(e.surface.num_vertices, frozenset(skel.edges))
    found, paths = has_complete_subdivision(g, n + 1)
    if found:
        report.subdivision = {f"{a}-{b}": list(path) for (a, b), path in sorted(paths.items())}
    steps.append(AuditStep("c", found, report.subdivision if found else {"k": n + 1}))
    steps.append(AuditStep("d", n + 1 <= answer.upper,
                           {"n+1": n + 1, "c0_upper": answer.upper, "c0_lower": answer.lower}))
    return report

