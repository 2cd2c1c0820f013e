"""Abstract polygonal surfaces, their classification, and rational embeddings."""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import EQ, LT, LinearSystem, RatVector, affine_rank, lp_feasible, solve_affine


class SurfaceError(ValueError):
    """The complex is not a compact surface; ``simplex`` names the culprit."""

    def __init__(self, message: str, simplex=None):
        super().__init__(message)
        self.simplex = simplex


class RotationError(ValueError):
    def __init__(self, message: str, vertex: int):
        super().__init__(message)
        self.vertex = vertex


class FaceShapeError(ValueError):
    """A realised face is not a planar strictly convex polygon."""

    def __init__(self, message: str, face: int):
        super().__init__(message)
        self.face = face


def edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def face_edges(face: Sequence[int]):
    k = len(face)
    for i in range(k):
        yield face[i], face[(i + 1) % k]


@dataclass(frozen=True)
class PolySurface:
    num_vertices: int
    faces: tuple  # tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "faces", tuple(tuple(int(v) for v in f) for f in self.faces))

    def edges(self) -> list[tuple[int, int]]:
        return sorted({edge_key(u, v) for f in self.faces for u, v in face_edges(f)})

    def edge_faces(self) -> dict[tuple[int, int], list[int]]:
        out: dict = defaultdict(list)
        for i, f in enumerate(self.faces):
            for u, v in face_edges(f):
                out[edge_key(u, v)].append(i)
        return dict(out)

    def boundary_edges(self) -> list[tuple[int, int]]:
        return sorted(e for e, fs in self.edge_faces().items() if len(fs) == 1)

    def neighbours(self) -> dict[int, set[int]]:
        adj = {v: set() for v in range(self.num_vertices)}
        for u, v in self.edges():
            adj[u].add(v)
            adj[v].add(u)
        return adj


@dataclass(frozen=True)
class SurfaceType:
    orientable: bool
    genus: int
    boundary_components: int

    @property
    def euler(self) -> int:
        if self.orientable:
            return 2 - 2 * self.genus - self.boundary_components
        return 2 - self.genus - self.boundary_components

    def __str__(self):
        kind = "orientable" if self.orientable else "non-orientable"
        return f"{kind} genus {self.genus}, {self.boundary_components} boundary component(s)"


def euler_characteristic(s: PolySurface) -> int:
    return s.num_vertices - len(s.edges()) + len(s.faces)


def _check_faces(s: PolySurface):
    used = set()
    for i, f in enumerate(s.faces):
        if len(f) < 3:
            raise SurfaceError(f"face {i} has fewer than 3 vertices", f)
        if len(set(f)) != len(f):
            raise SurfaceError(f"face {i} repeats a vertex", f)
        for v in f:
            if not 0 <= v < s.num_vertices:
                raise SurfaceError(f"face {i} uses unknown vertex {v}", f)
        used.update(f)
    for v in range(s.num_vertices):
        if v not in used:
            raise SurfaceError(f"vertex {v} lies in no face", (v,))


def _check_links(s: PolySurface):
    links: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for f in s.faces:
        k = len(f)
        for i, v in enumerate(f):
            links[v].append(edge_key(f[i - 1], f[(i + 1) % k]))
    for v, ledges in links.items():
        if len(set(ledges)) != len(ledges):
            raise SurfaceError(f"link of vertex {v} has a repeated edge", (v,))
        adj: dict = defaultdict(set)
        for a, b in ledges:
            adj[a].add(b)
            adj[b].add(a)
        if any(len(nb) > 2 for nb in adj.values()):
            raise SurfaceError(f"link of vertex {v} branches", (v,))
        start = next(iter(adj))
        seen = {start}
        todo = [start]
        while todo:
            x = todo.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        if len(seen) != len(adj):
            raise SurfaceError(f"link of vertex {v} is disconnected (pinch point)", (v,))


def _orientable(s: PolySurface, edge_faces) -> bool:
    sign = [0] * len(s.faces)
    for root in range(len(s.faces)):
        if sign[root]:
            continue
        sign[root] = 1
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for u, v in face_edges(s.faces[i]):
                if sign[i] < 0:
                    u, v = v, u
                for j in edge_faces[edge_key(u, v)]:
                    if j == i:
                        continue
                    # j must traverse the edge as (v, u) once oriented
                    fwd = any(a == u and b == v for a, b in face_edges(s.faces[j]))
                    want = -1 if fwd else 1
                    if sign[j] == 0:
                        sign[j] = want
                        queue.append(j)
                    elif sign[j] != want:
                        return False
    return True


def _connected(s: PolySurface) -> bool:
    adj = s.neighbours()
    seen = {0}
    todo = [0]
    while todo:
        x = todo.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return len(seen) == s.num_vertices


def boundary_cycles(s: PolySurface) -> list[tuple[int, ...]]:
    """Boundary components as vertex cycles, each starting at its smallest vertex."""
    adj: dict = defaultdict(list)
    for u, v in s.boundary_edges():
        adj[u].append(v)
        adj[v].append(u)
    for v, nb in adj.items():
        if len(nb) != 2:
            raise SurfaceError(f"boundary vertex {v} has {len(nb)} boundary edges", (v,))
    cycles = []
    seen = set()
    for start in sorted(adj):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        prev, cur = start, min(adj[start])
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            a, b = adj[cur]
            prev, cur = cur, (b if a == prev else a)
        cycles.append(tuple(cyc))
    return cycles


def validate_surface(s: PolySurface) -> SurfaceType:
    """Check that ``s`` is a connected compact surface and classify it."""
    if s.num_vertices < 3 or not s.faces:
        raise SurfaceError("empty complex")
    _check_faces(s)
    ef = s.edge_faces()
    for e, fs in ef.items():
        if len(fs) > 2:
            raise SurfaceError(f"edge {e} lies in {len(fs)} faces", e)
    _check_links(s)
    if not _connected(s):
        raise SurfaceError("complex is disconnected")
    b = len(boundary_cycles(s))
    chi = euler_characteristic(s)
    orientable = _orientable(s, ef)
    if orientable:
        twice_g = 2 - chi - b
        if twice_g < 0 or twice_g % 2:
            raise SurfaceError(f"inconsistent Euler characteristic {chi}")
        return SurfaceType(True, twice_g // 2, b)
    g = 2 - chi - b
    if g < 1:
        raise SurfaceError(f"inconsistent Euler characteristic {chi}")
    return SurfaceType(False, g, b)


def is_closed(s: PolySurface) -> bool:
    return not s.boundary_edges()


@dataclass(frozen=True)
class RotationSystem:
    neighbors: tuple  # neighbors[v] = cyclic order of v's neighbours

    def __post_init__(self):
        object.__setattr__(self, "neighbors", tuple(tuple(r) for r in self.neighbors))

    def validate(self):
        n = len(self.neighbors)
        sets = []
        for v, row in enumerate(self.neighbors):
            if v in row:
                raise RotationError(f"vertex {v} lists itself", v)
            if len(set(row)) != len(row):
                dup = sorted({u for u in row if row.count(u) > 1})
                raise RotationError(f"vertex {v} lists neighbour(s) {dup} twice", v)
            if any(not 0 <= u < n for u in row):
                raise RotationError(f"vertex {v} lists an unknown vertex", v)
            sets.append(set(row))
        for v in range(n):
            for u in sets[v]:
                if v not in sets[u]:
                    raise RotationError(f"{u} is a neighbour of {v} but not conversely", v)


def trace_faces(r: RotationSystem) -> PolySurface:
    """Faces of the oriented embedding: from dart (u, v) continue with
    (v, w), w the rotation successor of u around v."""
    r.validate()
    succ = []
    for row in r.neighbors:
        k = len(row)
        succ.append({row[i]: row[(i + 1) % k] for i in range(k)})
    used = set()
    faces = []
    for u, row in enumerate(r.neighbors):
        for v in row:
            if (u, v) in used:
                continue
            face = []
            a, b = u, v
            while (a, b) not in used:
                used.add((a, b))
                face.append(a)
                a, b = b, succ[b][a]
            faces.append(tuple(face))
    return PolySurface(len(r.neighbors), tuple(faces))


def is_proper_graph_embedding(s: PolySurface, graph) -> bool:
    """All vertices of ``graph`` (identified with surface vertices) on the boundary.

    Every graph edge must be an edge of ``s``.
    """
    surf_edges = set(s.edges())
    for v in range(graph.num_vertices):
        if not 0 <= v < s.num_vertices:
            raise ValueError(f"graph vertex {v} has no surface counterpart")
    for e in graph.edges:
        u, v = sorted(e)
        if (u, v) not in surf_edges:
            raise ValueError(f"graph edge {(u, v)} is not an edge of the surface")
    on_boundary = {v for e in s.boundary_edges() for v in e}
    return all(v in on_boundary for v in range(graph.num_vertices))


@dataclass(frozen=True)
class Embedding:
    surface: PolySurface
    coords: tuple  # tuple[RatVector, ...]

    def __post_init__(self):
        coords = tuple(tuple(Fraction(x) for x in p) for p in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.surface.num_vertices:
            raise ValueError("need one point per vertex")
        if coords and any(len(p) != len(coords[0]) for p in coords):
            raise ValueError("coordinates of mixed dimension")

    @property
    def dimension(self) -> int:
        return len(self.coords[0])

    def face_points(self, i: int) -> list[RatVector]:
        return [self.coords[v] for v in self.surface.faces[i]]

    def map_points(self, fn) -> "Embedding":
        return Embedding(self.surface, tuple(fn(p) for p in self.coords))


def _plane_coords(points: Sequence[RatVector]):
    """2-D affine coordinates of coplanar points (w.r.t. an affine frame chosen among them)."""
    p0 = points[0]
    p1 = points[1]
    for q in points[2:]:
        if affine_rank([p0, p1, q]) == 2:
            frame = [p0, p1, q]
            break
    else:
        return None
    out = []
    for p in points:
        w = solve_affine(frame, p)
        if w is None:
            return None
        out.append((w[1], w[2]))
    return out


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def check_face_shape(e: Embedding, i: int):
    pts = e.face_points(i)
    if affine_rank(pts) != 2:
        raise FaceShapeError(f"face {i} is not a planar polygon", i)
    q = _plane_coords(pts)
    if q is None:
        raise FaceShapeError(f"face {i} is not a planar polygon", i)
    k = len(q)
    side = 0
    for j in range(k):
        a, b = q[j], q[(j + 1) % k]
        for m in range(k):
            if m in (j, (j + 1) % k):
                continue
            c = _cross(a, b, q[m])
            s = (c > 0) - (c < 0)
            if s == 0 or (side and s != side):
                raise FaceShapeError(f"face {i} is not strictly convex", i)
            side = s


def faces_meet_properly(e: Embedding, i: int, j: int) -> bool:
    """Realised faces ``i`` and ``j`` meet exactly in their shared vertex or edge."""
    fa, fb = e.surface.faces[i], e.surface.faces[j]
    shared = set(fa) & set(fb)
    if len(shared) > 2:
        return False
    if len(shared) == 2:
        u, v = sorted(shared)
        ea = {edge_key(a, b) for a, b in face_edges(fa)}
        eb = {edge_key(a, b) for a, b in face_edges(fb)}
        if (u, v) not in ea or (u, v) not in eb:
            return False
    ka, kb = len(fa), len(fb)
    n = e.dimension
    nv = ka + kb
    cons = []
    for c in range(n):
        row = [e.coords[v][c] for v in fa] + [-e.coords[v][c] for v in fb]
        cons.append((row, EQ, 0))
    cons.append(([1] * ka + [0] * kb, EQ, 1))
    cons.append(([0] * ka + [1] * kb, EQ, 1))
    if shared:
        # some common point carries weight off the shared simplex
        row = [1 if v in shared else 0 for v in fa] + [0] * kb
        cons.append((row, LT, 1))
    ok, _ = lp_feasible(LinearSystem(nv, tuple(cons), frozenset(range(nv))))
    return not ok


def embedding_problems(e: Embedding) -> list[str]:
    """Human-readable list of embeddedness violations (empty when embedded)."""
    problems = []
    seen: dict = {}
    for v, p in enumerate(e.coords):
        if p in seen:
            problems.append(f"vertices {seen[p]} and {v} coincide")
        seen[p] = v
    for i in range(len(e.surface.faces)):
        try:
            check_face_shape(e, i)
        except FaceShapeError as exc:
            problems.append(str(exc))
    if problems:
        return problems
    lo = [tuple(min(c) for c in zip(*e.face_points(i))) for i in range(len(e.surface.faces))]
    hi = [tuple(max(c) for c in zip(*e.face_points(i))) for i in range(len(e.surface.faces))]
    for i in range(len(e.surface.faces)):
        for j in range(i + 1, len(e.surface.faces)):
            if not set(e.surface.faces[i]) & set(e.surface.faces[j]) and any(
                hi[i][c] < lo[j][c] or hi[j][c] < lo[i][c] for c in range(e.dimension)
            ):
                continue
            if not faces_meet_properly(e, i, j):
                problems.append(f"faces {i} and {j} intersect improperly")
    return problems


def check_embeddedness(e: Embedding) -> bool:
    """Exact embeddedness test; raises :class:`FaceShapeError` for a bad face."""
    seen = set()
    for p in e.coords:
        if p in seen:
            return False
        seen.add(p)
    for i in range(len(e.surface.faces)):
        check_face_shape(e, i)
    return not embedding_problems(e)


def from_labels(faces: Iterable[Sequence[int]], labels: Sequence[int]) -> PolySurface:
    """Build a surface from faces written with arbitrary vertex labels;
    ``labels[i]`` becomes vertex ``i``."""
    idx = {lab: i for i, lab in enumerate(labels)}
    return PolySurface(len(labels), tuple(tuple(idx[v] for v in f) for f in faces))
