"""Heawood numbers and relative chromatic numbers of surfaces with holes."""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

TABLE, FORMULA, ENDPOINT = "table", "formula", "theorem-endpoint"


@dataclass(frozen=True)
class ClosedSurfaceId:
    orientable: bool
    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be non-negative")
        if not self.orientable and self.genus < 1:
            raise ValueError("non-orientable genus starts at 1")

    @property
    def euler(self) -> int:
        return 2 - 2 * self.genus if self.orientable else 2 - self.genus

    @property
    def is_klein_bottle(self) -> bool:
        return not self.orientable and self.genus == 2

    def __str__(self):
        if self.orientable:
            return {0: "S2", 1: "T2"}.get(self.genus, f"#{self.genus}T2")
        return {1: "P2", 2: "K2"}.get(self.genus, f"#{self.genus}P2")


SPHERE = ClosedSurfaceId(True, 0)
TORUS = ClosedSurfaceId(True, 1)
PROJECTIVE_PLANE = ClosedSurfaceId(False, 1)
KLEIN_BOTTLE = ClosedSurfaceId(False, 2)


@dataclass(frozen=True)
class ChromaticAnswer:
    lower: int
    upper: int
    exact: int | None
    source: str

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError("empty interval")
        if self.exact is not None and not self.lower == self.upper == self.exact:
            raise ValueError("exact value must pin both bounds")

    def describe(self) -> str:
        tag = "table" if self.source == TABLE else "theorem"
        if self.exact is not None:
            return f"exact {self.exact} ({tag})"
        return f"bounds [{self.lower},{self.upper}] ({tag})"


def _floor_half(base: int, radicand: int) -> int:
    # floor((base + sqrt(radicand)) / 2), exact
    return (base + isqrt(radicand)) // 2


def heawood_number(s: ClosedSurfaceId) -> int:
    if s.is_klein_bottle:
        return 6
    return _floor_half(7, 49 - 24 * s.euler)


def upper_formula(s: ClosedSurfaceId, p: int) -> int:
    """The floored bound (5 + sqrt(25 - 24 chi + 24 p)) / 2."""
    return _floor_half(5, 25 - 24 * s.euler + 24 * p)


# Known relative chromatic numbers, rows p = 1..4; None marks an open case.
# Orientable genus 0..4.
_ORIENTABLE_ROWS = {
    1: (3, 6, 7, 8, 9),
    2: (4, 6, 8, None, 9),
    3: (4, 7, 8, 9, 10),
    4: (4, 7, 8, 9, 10),
}
# Non-orientable genus 1..9.
_NON_ORIENTABLE_ROWS = {
    1: (5, 5, 6, 7, 8, 8, 9, 9, 9),
    2: (5, 6, 7, None, 8, None, 9, None, None),
    3: (6, 6, 7, 8, 9, 9, 9, None, 10),
    4: (6, 6, 7, 8, 9, 9, 10, 10, 10),
}


def known_tables() -> dict[tuple[ClosedSurfaceId, int], int | None]:
    out: dict = {}
    for p, row in _ORIENTABLE_ROWS.items():
        for g, val in enumerate(row):
            out[(ClosedSurfaceId(True, g), p)] = val
    for p, row in _NON_ORIENTABLE_ROWS.items():
        for g, val in enumerate(row, start=1):
            out[(ClosedSurfaceId(False, g), p)] = val
    return out


_TABLES = known_tables()


def relative_chromatic(s: ClosedSurfaceId, p: int) -> ChromaticAnswer:
    """Value or bounds for the relative chromatic number of ``s`` minus ``p`` disks."""
    if p < 1:
        raise ValueError("p must be at least 1")
    val = _TABLES.get((s, p))
    if val is not None:
        return ChromaticAnswer(val, val, val, TABLE)
    c = heawood_number(s)
    if p == 1:
        return ChromaticAnswer(c - 1, c - 1, c - 1, ENDPOINT)
    if 2 * p >= c - 1:
        return ChromaticAnswer(c, c, c, ENDPOINT)
    lower = c - 1
    upper = min(c, upper_formula(s, p))
    # non-decreasing in p: earlier rows bound below, later rows above
    for (t, q), v in _TABLES.items():
        if t != s or v is None:
            continue
        if q < p:
            lower = max(lower, v)
        elif q > p:
            upper = min(upper, v)
    if lower == upper:
        return ChromaticAnswer(lower, upper, lower, FORMULA)
    return ChromaticAnswer(lower, upper, None, FORMULA)
