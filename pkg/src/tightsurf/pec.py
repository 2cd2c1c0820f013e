"""The PEC text format for exact polyhedral embeddings, plus OFF and JSON export.

    PEC 1
    dim 3
    v 0 0 0 1/2
    f 0 1 2

Vertex ids are 0-based and consecutive; coordinates are integers or
``p/q``.  Lines starting with ``#`` are comments.
"""
from __future__ import annotations

import json
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from .complex import Embedding, PolySurface
from .exact import format_rational

HEADER = "PEC 1"


class PecParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def _parse_rational(tok: str, line: int) -> Fraction:
    try:
        if "/" in tok:
            p, q = tok.split("/")
            if not q.isdigit() or int(q) == 0:
                raise ValueError
            return Fraction(int(p), int(q))
        return Fraction(int(tok))
    except ValueError:
        raise PecParseError(f"bad rational {tok!r}", line) from None


def loads(text: str) -> Embedding:
    lines = text.splitlines()
    body = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip() and not ln.lstrip().startswith("#")]
    if not body or body[0][1] != HEADER:
        raise PecParseError(f"missing {HEADER!r} header", body[0][0] if body else None)
    dim = None
    verts: list = []
    faces: list = []
    for no, ln in body[1:]:
        kind, *rest = ln.split()
        if kind == "dim":
            if dim is not None or len(rest) != 1 or not rest[0].isdigit() or int(rest[0]) < 1:
                raise PecParseError("bad dim line", no)
            dim = int(rest[0])
        elif kind == "v":
            if dim is None:
                raise PecParseError("vertex before dim", no)
            if len(rest) != dim + 1:
                raise PecParseError(f"vertex needs an id and {dim} coordinates", no)
            if rest[0] != str(len(verts)):
                raise PecParseError(f"expected vertex id {len(verts)}", no)
            verts.append(tuple(_parse_rational(t, no) for t in rest[1:]))
        elif kind == "f":
            try:
                ids = tuple(int(t) for t in rest)
            except ValueError:
                raise PecParseError("face ids must be integers", no) from None
            if len(ids) < 3:
                raise PecParseError("face needs at least 3 vertices", no)
            faces.append((no, ids))
        else:
            raise PecParseError(f"unknown record {kind!r}", no)
    if dim is None or not verts:
        raise PecParseError("no vertices")
    for no, ids in faces:
        if any(not 0 <= i < len(verts) for i in ids):
            raise PecParseError("face refers to an unknown vertex", no)
    return Embedding(PolySurface(len(verts), tuple(f for _, f in faces)), tuple(verts))


def dumps(e: Embedding, comments: Sequence[str] = ()) -> str:
    out = [HEADER]
    out += [f"# {c}" for c in comments]
    out.append(f"dim {e.dimension}")
    for i, p in enumerate(e.coords):
        out.append(f"v {i} " + " ".join(format_rational(x) for x in p))
    for f in e.surface.faces:
        out.append("f " + " ".join(str(v) for v in f))
    return "\n".join(out) + "\n"


def read(path) -> Embedding:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def write(path, e: Embedding, comments: Sequence[str] = ()):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(e, comments))


def _decimal(q: Fraction, places: int) -> str:
    with localcontext() as ctx:
        ctx.prec = places + 40
        d = Decimal(q.numerator) / Decimal(q.denominator)
        s = f"{d:.{places}f}"
    if s.startswith("-") and not s.strip("-0."):
        s = s[1:]
    return s


def to_off(e: Embedding, precision: int = 12, project: Sequence[int] | None = None) -> str:
    """OFF text; coordinates are decimal approximations."""
    if project is None:
        if e.dimension > 3:
            raise ValueError(f"dimension {e.dimension} needs an explicit projection to 3 coordinates")
        axes = list(range(e.dimension))
    else:
        axes = list(project)
        if len(axes) != 3 or len(set(axes)) != 3 or any(not 0 <= a < e.dimension for a in axes):
            raise ValueError("projection must name 3 distinct coordinate axes")
    zero = Fraction(0)
    lines = [
        "OFF",
        f"# decimal approximations to {precision} places; exact values are in the PEC source",
        f"{e.surface.num_vertices} {len(e.surface.faces)} {len(e.surface.edges())}",
    ]
    for p in e.coords:
        xyz = [p[a] for a in axes] + [zero] * (3 - len(axes))
        lines.append(" ".join(_decimal(x, precision) for x in xyz))
    for f in e.surface.faces:
        lines.append(f"{len(f)} " + " ".join(str(v) for v in f))
    return "\n".join(lines) + "\n"


def to_json(e: Embedding) -> str:
    doc = {
        "dim": e.dimension,
        "vertices": [[format_rational(x) for x in p] for p in e.coords],
        "faces": [list(f) for f in e.surface.faces],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def from_json(text: str) -> Embedding:
    doc = json.loads(text)
    verts = tuple(tuple(Fraction(x) for x in p) for p in doc["vertices"])
    return Embedding(PolySurface(len(verts), tuple(tuple(f) for f in doc["faces"])), verts)
