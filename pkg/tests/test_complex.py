from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tightsurf.complex import (
    Embedding, FaceShapeError, PolySurface, RotationError, RotationSystem, SurfaceError,
    SurfaceType, boundary_cycles, check_embeddedness, check_face_shape, embedding_problems,
    euler_characteristic, from_labels, is_closed, is_proper_graph_embedding, trace_faces,
    validate_surface,
)
from tightsurf.constructions import (
    K7_TORUS_ROTATION, MOBIUS_K5, K8_ROTATION_FAULTY, K8_ROTATION, rotation_surface,
)
from tightsurf.graphs import complete_graph

TETRA = PolySurface(4, ((0, 1, 2), (0, 3, 1), (1, 3, 2), (2, 3, 0)))


def test_tetrahedron_is_sphere():
    assert validate_surface(TETRA) == SurfaceType(True, 0, 0)
    assert is_closed(TETRA)


def test_mobius_strip():
    s = from_labels(MOBIUS_K5, (1, 2, 3, 4, 5))
    st_ = validate_surface(s)
    assert st_ == SurfaceType(False, 1, 1)
    assert boundary_cycles(s) == [(0, 2, 4, 1, 3)]
    assert is_proper_graph_embedding(s, complete_graph(5))


def test_annulus_of_quads():
    s = PolySurface(6, ((0, 1, 4, 3), (1, 2, 5, 4), (2, 0, 3, 5)))
    assert validate_surface(s) == SurfaceType(True, 0, 2)
    assert euler_characteristic(s) == 0


def test_edge_in_three_faces():
    s = PolySurface(5, ((0, 1, 2), (0, 1, 3), (0, 1, 4)))
    with pytest.raises(SurfaceError):
        validate_surface(s)


def test_pinched_vertex():
    # two triangles sharing only vertex 0
    s = PolySurface(5, ((0, 1, 2), (0, 3, 4)))
    with pytest.raises(SurfaceError, match="pinch"):
        validate_surface(s)


def test_unused_vertex_and_short_face():
    with pytest.raises(SurfaceError):
        validate_surface(PolySurface(4, ((0, 1, 2),)))
    with pytest.raises(SurfaceError):
        validate_surface(PolySurface(3, ((0, 1),)))


def test_disconnected():
    with pytest.raises(SurfaceError, match="disconnected"):
        validate_surface(PolySurface(6, ((0, 1, 2), (3, 4, 5))))


def test_k7_torus_by_rotation():
    s = rotation_surface(K7_TORUS_ROTATION)
    assert len(s.faces) == 14 and all(len(f) == 3 for f in s.faces)
    assert validate_surface(s) == SurfaceType(True, 1, 0)


def test_ascending_rotation_is_not_the_torus():
    rot = RotationSystem(tuple(tuple((i + k) % 7 for k in range(1, 7)) for i in range(7)))
    assert euler_characteristic(trace_faces(rot)) == -10


def test_faulty_k8_rows_rejected():
    with pytest.raises(RotationError) as info:
        RotationSystem(tuple(K8_ROTATION_FAULTY[v] for v in range(8))).validate()
    assert info.value.vertex == 6


def test_repaired_table_faces():
    s = rotation_surface(K8_ROTATION)
    quads = sorted(f for f in s.faces if len(f) == 4)
    assert quads == [(0, 2, 4, 6), (1, 7, 5, 3)]
    assert sum(len(f) == 3 for f in s.faces) == 16
    assert validate_surface(s) == SurfaceType(True, 2, 0)


def test_rotation_asymmetry_detected():
    with pytest.raises(RotationError):
        RotationSystem(((1, 2), (0,), (0, 1))).validate()


def test_folded_triangles_not_embedded():
    s = PolySurface(4, ((0, 1, 2), (0, 2, 3)))
    e = Embedding(s, ((0, 0), (2, 0), (0, 2), (1, 0)))  # second triangle lies on the first
    assert not check_embeddedness(e)
    assert embedding_problems(e)


def test_crossing_triangles_in_space():
    s = PolySurface(6, ((0, 1, 2), (3, 4, 5)))
    e = Embedding(s, ((0, 0, 0), (2, 0, 0), (0, 2, 0), (1, 1, -1), (1, 1, 1), (5, 5, 5)))
    assert not check_embeddedness(e)


def test_nonconvex_face_rejected():
    s = PolySurface(4, ((0, 1, 2, 3),))
    e = Embedding(s, ((0, 0), (2, 0), (1, Fraction(1, 3)), (1, 2)))
    with pytest.raises(FaceShapeError):
        check_face_shape(e, 0)


def test_non_planar_quad_rejected():
    s = PolySurface(4, ((0, 1, 2, 3),))
    e = Embedding(s, ((0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 1)))
    with pytest.raises(FaceShapeError):
        check_face_shape(e, 0)


def test_tetrahedron_embedded():
    e = Embedding(TETRA, ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert check_embeddedness(e)


def test_embedding_arity_checks():
    with pytest.raises(ValueError):
        Embedding(TETRA, ((0, 0, 0),))
    with pytest.raises(ValueError):
        Embedding(PolySurface(3, ((0, 1, 2),)), ((0, 0), (1, 0), (0, 1, 0)))


@settings(max_examples=25, deadline=None)
@given(st.permutations(range(7)))
def test_classification_relabel_invariant(perm):
    s = rotation_surface(K7_TORUS_ROTATION)
    t = PolySurface(7, tuple(tuple(perm[v] for v in f) for f in s.faces))
    assert validate_surface(t) == validate_surface(s)


@settings(max_examples=25, deadline=None)
@given(st.permutations(range(5)), st.integers(0, 4))
def test_mobius_classification_under_relabel_and_rotation(perm, r):
    faces = [tuple(perm[v - 1] for v in f) for f in MOBIUS_K5]
    faces = [f[r % 3:] + f[: r % 3] for f in faces]
    assert validate_surface(PolySurface(5, tuple(faces))) == SurfaceType(False, 1, 1)
