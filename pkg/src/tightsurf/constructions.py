"""Builders for tight polyhedral surfaces with boundary.

Three operators (canonical simplex placement, handle attachment, hole
punching) plus a named catalog covering spheres, projective planes, tori,
Klein bottles, the non-orientable genus-3 surface and the orientable
genus-2 surface, each with p = 1, 2, ... boundary components.

Every operator re-checks its promised postconditions and raises
:class:`ConstructionError` instead of returning a bad embedding.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Sequence

from .chromatic import ClosedSurfaceId, relative_chromatic
from .complex import (
    Embedding,
    PolySurface,
    RotationSystem,
    SurfaceType,
    edge_key,
    euler_characteristic,
    from_labels,
    trace_faces,
    validate_surface,
)
from .exact import EQ, GT, LinearSystem, affine_rank, combination, lp_feasible
from .hull import extreme_points, is_in_hull
from .tightness import is_tight_surface


class ConstructionError(ValueError):
    pass


def simplex_coords(n: int) -> list[tuple]:
    """Origin followed by the standard basis of R^n."""
    zero = Fraction(0)
    out = [tuple(zero for _ in range(n))]
    for i in range(n):
        out.append(tuple(Fraction(int(k == i)) for k in range(n)))
    return out


def _boundary_vertices(s: PolySurface) -> set[int]:
    return {v for e in s.boundary_edges() for v in e}


def canonical(s: PolySurface) -> Embedding:
    """Place a K_{n+1}-triangulated surface on the vertices of the standard n-simplex."""
    v = s.num_vertices
    if any(len(f) != 3 for f in s.faces):
        raise ConstructionError("canonical placement needs a triangulation")
    if len(s.edges()) != v * (v - 1) // 2:
        raise ConstructionError("1-skeleton is not a complete graph")
    validate_surface(s)
    if s.boundary_edges():
        inner = sorted(set(range(v)) - _boundary_vertices(s))
        if inner:
            raise ConstructionError(f"bordered surface has interior vertices {inner}")
    e = Embedding(s, tuple(simplex_coords(v - 1)))
    verdict = is_tight_surface(e)
    if not (verdict.tight and verdict.substantial):
        raise ConstructionError(f"canonical placement is not tight: {verdict.witnesses}")
    return e


def remove_faces(e: Embedding, face_ids: Sequence[int]) -> Embedding:
    drop = set(face_ids)
    faces = tuple(f for i, f in enumerate(e.surface.faces) if i not in drop)
    return Embedding(PolySurface(e.surface.num_vertices, faces), e.coords)


def _extend(e: Embedding, faces, new_points) -> Embedding:
    return Embedding(
        PolySurface(e.surface.num_vertices + len(new_points), tuple(faces)),
        tuple(e.coords) + tuple(new_points),
    )


def _check_result(before: Embedding, after: Embedding, new_vertices, hole_delta: int, check_tight: bool):
    old_type = validate_surface(before.surface)
    try:
        new_type = validate_surface(after.surface)
    except ValueError as exc:
        raise ConstructionError(f"result is not a surface: {exc}") from exc
    if euler_characteristic(after.surface) != euler_characteristic(before.surface) - 1:
        raise ConstructionError("Euler characteristic did not drop by one")
    if hole_delta and new_type.boundary_components != old_type.boundary_components + hole_delta:
        raise ConstructionError("boundary component count is wrong")
    nbrs = after.surface.neighbours()
    for v in new_vertices:
        if not is_in_hull(after.coords[v], [after.coords[u] for u in sorted(nbrs[v])]):
            raise ConstructionError(f"new vertex {v} is outside the hull of its neighbours")
    if extreme_points(list(after.coords)) != extreme_points(list(before.coords)):
        raise ConstructionError("the set of extreme points changed")
    old_b = _boundary_vertices(before.surface)
    if old_b == set(range(before.surface.num_vertices)) and _boundary_vertices(after.surface) != set(
        range(after.surface.num_vertices)
    ):
        raise ConstructionError("a vertex left the boundary")
    if check_tight:
        # a closed tight surface with a first hole is tight only once every
        # extreme point reaches the boundary, so only 0-tightness is promised
        old_v, new_v = is_tight_surface(before), is_tight_surface(after)
        if old_v.zero_tight and not new_v.zero_tight:
            raise ConstructionError(f"0-tightness was lost: {new_v.witnesses}")
        if old_b and old_v.tight and not new_v.tight:
            raise ConstructionError(f"tightness was lost: {new_v.witnesses}")
    return new_type


def _tetrahedron_meets_face(corners, face_points) -> bool:
    """Does the open tetrahedron ``corners`` meet the convex polygon ``face_points``?"""
    k, m, n = len(corners), len(face_points), len(corners[0])
    cons = []
    for c in range(n):
        cons.append(([p[c] for p in corners] + [-q[c] for q in face_points], EQ, 0))
    cons.append(([1] * k + [0] * m, EQ, 1))
    cons.append(([0] * k + [1] * m, EQ, 1))
    for i in range(k):
        cons.append(([int(j == i) for j in range(k)] + [0] * m, GT, 0))
    ok, _ = lp_feasible(LinearSystem(k + m, tuple(cons), frozenset(range(k + m))))
    return ok


def handle_preconditions(e: Embedding, a: int, b: int, c: int, d: int) -> str | None:
    """Reason the handle cannot go between [ab] and [cd], or None if it can."""
    if len({a, b, c, d}) != 4:
        return "the two edges must have four distinct endpoints"
    bnd = set(e.surface.boundary_edges())
    for u, v in ((a, b), (c, d)):
        if edge_key(u, v) not in bnd:
            return f"[{u}{v}] is not a boundary edge"
    corners = [e.coords[x] for x in (a, b, c, d)]
    if affine_rank(corners) != 3:
        return "tetrahedron is degenerate"
    for i in range(len(e.surface.faces)):
        if _tetrahedron_meets_face(corners, e.face_points(i)):
            return f"open tetrahedron meets face {i}"
    return None


def attach_handle(e: Embedding, a: int, b: int, c: int, d: int, variant: bool = False,
                  check_tight: bool = True) -> Embedding:
    """Glue a four-triangle band between boundary edges [ab] and [cd].

    The band lives in the tetrahedron abcd; its two new vertices have
    barycentric weights (2,1,2,1)/6 and (1,2,1,2)/6.  ``variant`` swaps
    a and b, which flips the way the band is glued.
    """
    reason = handle_preconditions(e, a, b, c, d)
    if reason:
        raise ConstructionError(reason)
    if variant:
        a, b = b, a
    pts = [e.coords[x] for x in (a, b, c, d)]
    sixth = Fraction(1, 6)
    pe = combination([2 * sixth, sixth, 2 * sixth, sixth], pts)
    pf = combination([sixth, 2 * sixth, sixth, 2 * sixth], pts)
    ve, vf = e.surface.num_vertices, e.surface.num_vertices + 1
    band = [(a, ve, vf), (a, vf, b), (ve, c, d), (ve, d, vf)]
    out = _extend(e, list(e.surface.faces) + band, [pe, pf])
    _check_result(e, out, (ve, vf), 0, check_tight)
    return out


def _split_for_contact(e: Embedding, face: int, contact: tuple) -> tuple[Embedding, int]:
    """Cut a triangle containing ``contact`` off polygon ``face`` with a new diagonal."""
    f = e.surface.faces[face]
    k = len(f)
    existing = set(e.surface.edges())
    for r in range(k):
        tri = (f[r], f[(r + 1) % k], f[(r + 2) % k])
        if edge_key(tri[0], tri[2]) in existing or not set(contact) <= set(tri):
            continue
        rest = tuple(f[(r + 2 + i) % k] for i in range(k - 1))
        faces = list(e.surface.faces)
        faces[face] = tri
        faces.append(rest)
        return Embedding(PolySurface(e.surface.num_vertices, tuple(faces)), e.coords), face
    raise ConstructionError(f"no usable diagonal in face {face}")


def punch_hole(e: Embedding, face: int, boundary_contact: int = 0, at: Sequence[int] = (),
               split: bool = False, check_tight: bool = True) -> Embedding:
    """Open a new boundary component inside ``face``.

    ``boundary_contact`` 0 removes a small central triangle; 1 and 2 make
    that many of the face's own (currently interior) vertices, listed in
    ``at``, part of the new boundary.  Non-triangular faces need
    ``split=True`` and are cut by a diagonal that is not yet an edge.
    """
    if boundary_contact not in (0, 1, 2):
        raise ConstructionError("boundary_contact must be 0, 1 or 2")
    at = tuple(at)
    if len(at) != boundary_contact:
        raise ConstructionError(f"need exactly {boundary_contact} contact vertices")
    if not 0 <= face < len(e.surface.faces):
        raise ConstructionError(f"no face {face}")
    f = e.surface.faces[face]
    if not set(at) <= set(f):
        raise ConstructionError("contact vertices must belong to the face")
    bverts = _boundary_vertices(e.surface)
    touching = [v for v in at if v in bverts]
    if touching:
        raise ConstructionError(f"contact vertices {touching} are already on the boundary")
    base = e
    if len(f) != 3:
        if not split:
            raise ConstructionError(f"face {face} is not a triangle and splitting was not allowed")
        base, face = _split_for_contact(e, face, at)
        f = base.surface.faces[face]
    # rotate so the contact vertices come first: A, then B
    for r in range(3):
        cand = f[r:] + f[:r]
        if tuple(cand[: len(at)]) == at or (len(at) == 2 and tuple(cand[:2]) == at[::-1]):
            f = cand
            break
    A, B, C = f
    pa, pb, pc = (base.coords[x] for x in f)
    third = Fraction(1, 3)
    n0 = base.surface.num_vertices
    faces = [g for i, g in enumerate(base.surface.faces) if i != face]
    if boundary_contact == 0:
        g = combination([third] * 3, [pa, pb, pc])
        new = [combination([2 * third, third], [p, g]) for p in (pa, pb, pc)]
        x, y, z = n0, n0 + 1, n0 + 2
        faces += [(A, B, x), (B, y, x), (B, C, y), (C, z, y), (C, A, z), (A, x, z)]
    elif boundary_contact == 1:
        py = combination([Fraction(1, 5), Fraction(2, 5), Fraction(2, 5)], [pa, pb, pc])
        pz = combination([third] * 3, [pa, py, pc])
        new = [py, pz]
        y, z = n0, n0 + 1
        faces += [(A, B, y), (B, C, y), (y, C, z), (z, C, A)]
    else:
        new = [combination([third] * 3, [pa, pb, pc])]
        z = n0
        faces += [(B, C, z), (C, A, z)]
    out = _extend(base, faces, new)
    _check_result(e, out, range(n0, n0 + len(new)), 1, check_tight)
    return out


# -- fixed combinatorial data ------------------------------------------------

# Rotation rows of K8 on the genus-2 surface with a faulty row for vertex 6:
# it lists 2 twice and omits 1.
K8_ROTATION_FAULTY = {
    0: (2, 7, 3, 1, 4, 5, 6),
    2: (4, 1, 5, 3, 6, 7, 0),
    4: (6, 3, 7, 5, 0, 1, 2),
    6: (0, 5, 2, 7, 2, 3, 4),
    1: (7, 6, 5, 2, 4, 0, 3),
    3: (1, 0, 7, 4, 6, 2, 5),
    5: (3, 2, 1, 6, 0, 4, 7),
    7: (5, 4, 3, 0, 2, 6, 1),
}
# The only single-entry repair of row 6 giving a surface with proper faces.
K8_ROTATION = {**K8_ROTATION_FAULTY, 6: (0, 5, 1, 7, 2, 3, 4)}

# K7 on the torus: rotation at i is i+1, i+3, i+2, i+6, i+4, i+5 (mod 7).
K7_TORUS_ROTATION = {i: tuple((i + s) % 7 for s in (1, 3, 2, 6, 4, 5)) for i in range(7)}

# K6 on the Klein bottle (labels 1..6): eight triangles and one hexagonal
# region 1,4,5,3,4,6 whose boundary passes twice through vertex 4.
KLEIN_K6_TRIANGLES = ((1, 2, 4), (1, 2, 5), (1, 3, 5), (1, 3, 6), (2, 3, 4), (2, 3, 6), (2, 5, 6), (4, 5, 6))
KLEIN_K6_HEXAGON = (1, 4, 5, 3, 4, 6)

# K7 on the non-orientable surface of Euler characteristic -1 (labels
# 1..7): twelve triangles and a hexagonal region passing twice through 2.
N3_K7_TRIANGLES = (
    (1, 2, 4), (1, 3, 6), (1, 4, 7), (1, 5, 6), (1, 5, 7), (2, 3, 5),
    (2, 4, 6), (2, 6, 7), (3, 4, 5), (3, 4, 7), (3, 6, 7), (4, 5, 6),
)
N3_K7_HEXAGON = (1, 2, 5, 7, 2, 3)

MOBIUS_K5 = ((1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 5, 1), (5, 1, 2))
HEMI_ICOSAHEDRON = (
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
    (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4),
)


def rotation_surface(rotation: dict) -> PolySurface:
    r = RotationSystem(tuple(rotation[v] for v in range(len(rotation))))
    r.validate()
    return trace_faces(r)


def _labelled(faces, labels, coords_by_label) -> Embedding:
    s = from_labels(faces, labels)
    return Embedding(s, tuple(coords_by_label[x] for x in labels))


def _simplex_labels(labels):
    pts = simplex_coords(len(labels) - 1)
    return dict(zip(labels, pts))


def _centroid(pts):
    return combination([Fraction(1, len(pts))] * len(pts), pts)


def _face_index(e: Embedding, vertices) -> int:
    want = set(vertices)
    for i, f in enumerate(e.surface.faces):
        if set(f) == want:
            return i
    raise ConstructionError(f"no face on {sorted(want)}")


# -- base builders -----------------------------------------------------------

def sphere_1() -> Embedding:
    s = PolySurface(3, ((0, 1, 2),))
    return Embedding(s, ((0, 0), (1, 0), (0, 1)))


def sphere_2() -> Embedding:
    s = PolySurface(6, ((0, 1, 4, 3), (1, 2, 5, 4), (2, 0, 3, 5)))
    base = [(0, 0), (1, 0), (0, 1)]
    return Embedding(s, tuple((x, y, z) for z in (0, 1) for x, y in base))


def mobius() -> Embedding:
    return canonical(from_labels(MOBIUS_K5, (1, 2, 3, 4, 5)))


def _mobius_handle(variant: bool) -> Embedding:
    # boundary edges [13] and [52] of the labelled strip, i.e. (0,2) and (4,1)
    return attach_handle(mobius(), 0, 2, 4, 1, variant=variant)


def projective_3() -> Embedding:
    e = canonical(from_labels(HEMI_ICOSAHEDRON, (1, 2, 3, 4, 5, 6)))
    for tri, pair in (((1, 2, 3), (1, 2)), ((3, 4, 6), (3, 4)), ((1, 5, 6), (5, 6))):
        e = punch_hole(e, _face_index(e, [x - 1 for x in tri]), 2, [x - 1 for x in pair])
    return e


def torus_closed() -> Embedding:
    return canonical(rotation_surface(K7_TORUS_ROTATION))


def torus_1() -> Embedding:
    s = rotation_surface(K7_TORUS_ROTATION)
    return canonical(PolySurface(6, tuple(f for f in s.faces if 6 not in f)))


def torus_3() -> Embedding:
    e = torus_closed()
    faces = e.surface.faces
    i, j = next((i, j) for i, j in combinations(range(len(faces)), 2) if not set(faces[i]) & set(faces[j]))
    left = (set(range(7)) - set(faces[i]) - set(faces[j])).pop()
    e = remove_faces(e, (i, j))
    k = next(k for k, f in enumerate(e.surface.faces) if left in f)
    return punch_hole(e, k, 1, [left])


def klein_2() -> Embedding:
    labels = (1, 2, 3, 4, 5, 6, 7)
    pos = _simplex_labels(labels[:6])
    pos[7] = _centroid([pos[3], pos[4], pos[6]])
    faces = KLEIN_K6_TRIANGLES + ((3, 4, 7), (4, 6, 7))
    e = _labelled(faces, labels, pos)
    return punch_hole(e, _face_index(e, (0, 1, 3)), 1, [1])


def n3_1() -> Embedding:
    # boundary hexagon of the punctured torus is 0-2-1-5-3-4
    return attach_handle(torus_1(), *_N3_HANDLE)


def n3_2() -> Embedding:
    labels = (1, 2, 3, 4, 5, 6, 7, 8)
    pos = _simplex_labels(labels[:7])
    pos[8] = _centroid([pos[2], pos[3], pos[7]])
    faces = N3_K7_TRIANGLES + ((7, 2, 8), (2, 3, 8))
    e = _labelled(faces, labels, pos)
    return punch_hole(e, _face_index(e, (1, 3, 5)), 2, [3, 5])


def genus2_2() -> Embedding:
    s = rotation_surface(K8_ROTATION)
    return canonical(PolySurface(8, tuple(f for f in s.faces if len(f) == 3)))


def genus2_1() -> Embedding:
    s = rotation_surface(K8_ROTATION)
    kept = [f for f in s.faces if len(f) == 3 and 0 not in f]
    labels = tuple(range(1, 10))
    pos = _simplex_labels(labels[:7])
    pos[8] = _centroid([pos[2], pos[4], pos[6]])
    # on the hull edge [13], so that edge stays covered by surface edges
    pos[9] = combination([Fraction(1, 2)] * 2, [pos[1], pos[3]])
    faces = kept + [(2, 4, 8), (4, 6, 8), (3, 5, 9), (5, 7, 9), (7, 1, 9)]
    return _labelled(faces, labels, pos)


# -- catalog -------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    closed: ClosedSurfaceId
    p: int
    expected: SurfaceType
    dimension: int
    c0: int
    route: str = ""


def _punch_more(e: Embedding, times: int) -> Embedding:
    for _ in range(times):
        e = punch_hole(e, 0, 0, split=True)
    return e


# name prefix -> (closed surface, {p: (builder, route)}, largest p with its own recipe)
_FAMILIES: dict[str, tuple[ClosedSurfaceId, dict[int, tuple[Callable[[], Embedding], str]]]] = {
    "S2": (ClosedSurfaceId(True, 0), {
        1: (sphere_1, "triangle"),
        2: (sphere_2, "three-rectangle cylinder"),
    }),
    "P2": (ClosedSurfaceId(False, 1), {
        1: (mobius, "canonical Moebius strip"),
        2: (lambda: _mobius_handle(True), "handle on the Moebius strip"),
        3: (projective_3, "hemi-icosahedron with three edge holes"),
    }),
    "T2": (ClosedSurfaceId(True, 1), {
        1: (torus_1, "K7 torus minus a vertex star"),
        2: (lambda: _punch_more(torus_1(), 1), "hole in the punctured torus"),
        3: (torus_3, "K7 torus minus two faces plus a vertex hole"),
    }),
    "K2": (ClosedSurfaceId(False, 2), {
        1: (lambda: _mobius_handle(False), "handle on the Moebius strip"),
        2: (klein_2, "K6 Klein bottle with a split hexagon and a vertex hole"),
    }),
    "N3": (ClosedSurfaceId(False, 3), {
        1: (n3_1, "non-orientable handle on the punctured torus"),
        2: (n3_2, "K7 surface with a split hexagon and an edge hole"),
    }),
    "G2": (ClosedSurfaceId(True, 2), {
        1: (genus2_1, "nine-vertex genus-2 surface"),
        2: (genus2_2, "K8 genus-2 surface minus two quadrilaterals"),
    }),
}

# Handle placement on the punctured torus chosen so the result is non-orientable.
_N3_HANDLE = (0, 2, 3, 4, False)

ALIASES = {"P2_2_punch": ("P2", 2, lambda: _punch_more(mobius(), 1), "hole in the Moebius strip")}

MAX_P = 12
CORE_NAMES = tuple(f"{fam}_{p}" for fam in _FAMILIES for p in range(1, 5)) + tuple(ALIASES)
ACCEPTANCE_NAMES = (
    "S2_1", "S2_2", "S2_3", "S2_4", "P2_1", "P2_2", "P2_3", "T2_1", "T2_2", "T2_3",
    "K2_1", "K2_2", "N3_1", "N3_2", "G2_1", "G2_2",
)


def catalog_entry(name: str) -> tuple[CatalogEntry, Callable[[], Embedding]]:
    if name in ALIASES:
        fam, p, builder, route = ALIASES[name]
    else:
        m = re.fullmatch(r"([A-Z]\d)_(\d+)", name)
        if not m or m.group(1) not in _FAMILIES or not 1 <= int(m.group(2)) <= MAX_P:
            raise KeyError(f"unknown catalog entry {name!r}")
        fam, p = m.group(1), int(m.group(2))
        recipes = _FAMILIES[fam][1]
        if p in recipes:
            builder, route = recipes[p]
        else:
            top = max(recipes)
            base_builder = recipes[top][0]
            builder = (lambda b, k: (lambda: _punch_more(b(), k)))(base_builder, p - top)
            route = f"{recipes[top][1]}, then {p - top} more hole(s)"
    closed = _FAMILIES[fam][0]
    c0 = relative_chromatic(closed, p)
    if c0.exact is None:
        raise KeyError(f"{name}: relative chromatic number unknown")
    entry = CatalogEntry(name, closed, p, SurfaceType(closed.orientable, closed.genus, p),
                         c0.exact - 1, c0.exact, route)
    return entry, builder


def build_catalog(name: str) -> tuple[Embedding, CatalogEntry]:
    entry, builder = catalog_entry(name)
    return builder(), entry
