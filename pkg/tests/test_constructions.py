import pytest

from tightsurf.complex import (
    Embedding, PolySurface, SurfaceType, boundary_cycles, euler_characteristic, validate_surface,
)
from tightsurf.constructions import (
    ConstructionError, attach_handle, build_catalog, canonical, catalog_entry,
    handle_preconditions, mobius, punch_hole, rotation_surface, simplex_coords,
    torus_closed, K7_TORUS_ROTATION,
)
from tightsurf.hull import extreme_points, is_in_hull
from tightsurf.tightness import is_tight_surface

from _support import built


def test_canonical_rejects_incomplete_skeleton():
    s = PolySurface(6, ((0, 1, 4, 3), (1, 2, 5, 4), (2, 0, 3, 5)))
    with pytest.raises(ConstructionError):
        canonical(s)
    with pytest.raises(ConstructionError, match="complete"):
        canonical(PolySurface(4, ((0, 1, 2), (0, 2, 3))))


def test_canonical_rejects_interior_vertex():
    # cone over a triangle: vertex 3 is interior
    s = PolySurface(4, ((0, 1, 3), (1, 2, 3), (2, 0, 3)))
    with pytest.raises(ConstructionError, match="interior"):
        canonical(s)


def test_canonical_deterministic():
    a = canonical(rotation_surface(K7_TORUS_ROTATION))
    b = canonical(rotation_surface(K7_TORUS_ROTATION))
    assert a == b
    assert a.coords == tuple(simplex_coords(6))


def test_closed_torus_is_tight():
    v = is_tight_surface(torus_closed())
    assert v.tight and v.substantial


def test_handle_on_mobius_both_ways():
    k = attach_handle(mobius(), 0, 2, 4, 1)
    p = attach_handle(mobius(), 0, 2, 4, 1, variant=True)
    assert validate_surface(k.surface) == SurfaceType(False, 2, 1)
    assert validate_surface(p.surface) == SurfaceType(False, 1, 2)


def test_handle_new_vertices():
    e = attach_handle(mobius(), 0, 2, 4, 1)
    nb = e.surface.neighbours()
    a, b, c, d, ve, vf = 0, 2, 4, 1, 5, 6
    assert {a, c, vf} <= nb[ve] and {b, d, ve} <= nb[vf]
    assert is_in_hull(e.coords[ve], [e.coords[x] for x in (a, c, vf)])
    assert is_in_hull(e.coords[vf], [e.coords[x] for x in (b, d, ve)])


def test_handle_preconditions():
    m = mobius()
    assert "boundary" in handle_preconditions(m, 0, 1, 2, 3)  # [01] is interior
    assert "distinct" in handle_preconditions(m, 0, 2, 2, 4)
    with pytest.raises(ConstructionError):
        attach_handle(m, 0, 1, 2, 3)


def test_handle_blocked_by_surface():
    # square annulus in the plane: the "tetrahedron" of two sides is flat
    e = built("S2_2")[0]
    flat = Embedding(e.surface, tuple((x, y, 0 * z) for x, y, z in e.coords))
    assert handle_preconditions(flat, 0, 1, 3, 4) is not None


def test_punch_each_contact():
    base = torus_closed()
    for contact, at in ((0, ()), (1, (0,)), (2, (0, 1))):
        f = next(i for i, face in enumerate(base.surface.faces) if set(at) <= set(face))
        out = punch_hole(base, f, contact, at)
        assert validate_surface(out.surface) == SurfaceType(True, 1, 1)
        assert euler_characteristic(out.surface) == -1
        cyc = boundary_cycles(out.surface)[0]
        assert set(at) <= set(cyc)
        assert extreme_points(list(out.coords)) == extreme_points(list(base.coords))


def test_punch_requires_split_permission():
    e = built("S2_2")[0]
    with pytest.raises(ConstructionError, match="splitting"):
        punch_hole(e, 0)
    out = punch_hole(e, 0, split=True)
    assert validate_surface(out.surface).boundary_components == 3


def test_punch_refuses_boundary_contact_vertex():
    with pytest.raises(ConstructionError, match="already on the boundary"):
        punch_hole(mobius(), 0, 1, (0,))


def test_punch_argument_checks():
    m = mobius()
    with pytest.raises(ConstructionError):
        punch_hole(m, 0, 3)
    with pytest.raises(ConstructionError):
        punch_hole(m, 0, 1, ())
    with pytest.raises(ConstructionError):
        punch_hole(m, 99)


def _displaced(real):
    """``combination`` that pushes every new point away from the origin."""
    def fake(weights, points):
        return tuple(3 * x + 1 for x in real(weights, points))
    return fake


def test_postcondition_failure_aborts(monkeypatch):
    import tightsurf.constructions as c
    monkeypatch.setattr(c, "combination", _displaced(c.combination))
    with pytest.raises(ConstructionError):
        punch_hole(built("T2_1")[0], 0)
    with pytest.raises(ConstructionError):
        attach_handle(built("P2_1")[0], 0, 2, 4, 1)


def test_catalog_examples():
    e, entry = build_catalog("P2_1")
    assert (e.surface.num_vertices, e.dimension) == (5, 4)
    assert entry.expected == SurfaceType(False, 1, 1)
    e, entry = build_catalog("G2_2")
    assert (e.surface.num_vertices, e.dimension, entry.c0) == (8, 7, 8)
    assert validate_surface(e.surface) == SurfaceType(True, 2, 2)


def test_genus_two_nine_vertices():
    e, _ = built("G2_1")
    assert (e.surface.num_vertices, e.dimension) == (9, 6)
    # labels 1..9 are vertices 0..8; boundary 2-7-3-9-1-4-5-6-8
    label = [c + 1 for c in boundary_cycles(e.surface)[0]]
    want = [2, 7, 3, 9, 1, 4, 5, 6, 8]
    rots = [want[i:] + want[:i] for i in range(9)]
    assert label in rots or label[::-1] in rots
    assert extreme_points(list(e.coords)) == frozenset(range(7))
    nb = e.surface.neighbours()
    for v in (7, 8):
        assert is_in_hull(e.coords[v], [e.coords[u] for u in sorted(nb[v])])


def test_unknown_names():
    for bad in ("nosuch", "S2_0", "X9_1", "S2_99"):
        with pytest.raises(KeyError):
            catalog_entry(bad)


def test_catalog_dimension_matches_c0():
    for name in ("S2_7", "T2_5", "G2_3"):
        entry, _ = catalog_entry(name)
        assert entry.dimension == entry.c0 - 1


def test_two_routes_to_p2_2_agree_on_type():
    a, _ = built("P2_2")
    b, _ = built("P2_2_punch")
    assert validate_surface(a.surface) == validate_surface(b.surface)
