import pytest

from ripoly import (
    EmptyPolyhedronError,
    FaceRelation,
    PointNotInPolyhedronError,
    Polyhedron,
    Q,
    RiStrategy,
    Subspace,
    contains,
    face_relation,
    implicit_equalities,
    is_bounded,
    is_empty,
    poly_dim,
    relative_interior_point,
    restrict_to_affine,
    ri_membership,
    smallest_face,
    vertices,
)
from ripoly.polyhedron import face_polyhedron, prolong, tight_set_at


def qp(*vals):
    return tuple(Q(v) for v in vals)


def test_contains(quad):
    assert contains(quad, qp(2, 1))
    assert contains(quad, qp(3, 0))
    assert not contains(quad, qp(0, 0))  # cut off by -4x1 - x2 <= -4


def test_vertices(quad):
    assert vertices(quad) == (qp(0, 4), qp(1, 0), qp(3, 0), qp(3, 1))


def test_empty_and_feasible():
    empty = Polyhedron.make([((1,), 0), ((-1,), -1)], [], 1)  # x<=0, x>=1
    assert is_empty(empty)
    with pytest.raises(EmptyPolyhedronError):
        relative_interior_point(empty)


def test_box_and_boundedness():
    B = Polyhedron.box([0, 0], [1, 1])
    assert is_bounded(B)
    assert poly_dim(B) == 2
    half = Polyhedron.make([((-1, 0), 0)], [], 2)  # x1 >= 0
    assert not is_bounded(half)


def test_implicit_equalities_detected():
    # x1 <= 1 and x1 >= 1 sandwich an implicit equality
    P = Polyhedron.make([((1, 0), 1), ((-1, 0), -1), ((0, 1), 2), ((0, -1), 0)], [], 2)
    impl = implicit_equalities(P)
    assert impl == frozenset({0, 1})
    assert poly_dim(P) == 1
    z = relative_interior_point(P)
    assert z[0] == 1 and 0 < z[1] < 2


def test_ri_membership(quad):
    assert ri_membership(quad, qp(2, 1))
    assert not ri_membership(quad, qp(3, 0))  # vertex
    assert not ri_membership(quad, (Q(3), Q(1, 2)))  # edge point
    assert not ri_membership(quad, qp(9, 9))


def test_ri_point_strategies(quad):
    for strat in RiStrategy:
        z = relative_interior_point(quad, strat)
        assert ri_membership(quad, z)


def test_ri_point_on_a_face(quad):
    edge = face_polyhedron(quad, frozenset({1}))  # x1 = 3
    z = relative_interior_point(edge)
    assert z[0] == 3 and 0 < z[1] < 1


def test_smallest_face_vertex(quad):
    fd = smallest_face(quad, qp(3, 0))
    assert fd.dim == 0
    assert fd.tight_set == frozenset({0, 1})


def test_smallest_face_edge_and_body(quad):
    assert smallest_face(quad, (Q(3), Q(1, 2))).dim == 1
    assert smallest_face(quad, qp(2, 1)).dim == 2
    assert smallest_face(quad, qp(2, 1)).tight_set == frozenset()


def test_smallest_face_requires_membership(quad):
    with pytest.raises(PointNotInPolyhedronError):
        smallest_face(quad, qp(9, 9))


def test_smallest_face_canonical_under_redundancy(quad):
    # adding a redundant copy of a tight row must not change the face dim
    P = quad.with_inequalities([(Q(1), Q(0))], [Q(3)])
    fd = smallest_face(P, qp(3, 0))
    assert fd.dim == 0


def test_face_relation(quad):
    v, e, body = qp(3, 0), (Q(3), Q(1, 2)), qp(2, 1)
    assert face_relation(quad, v, e) is FaceRelation.PROPER_SUBFACE
    assert face_relation(quad, e, v) is FaceRelation.PROPER_SUPERFACE
    assert face_relation(quad, body, body) is FaceRelation.EQUAL_FACE
    v2 = qp(0, 4)
    assert face_relation(quad, v, v2) is FaceRelation.INCOMPARABLE


def test_tight_set_at(quad):
    assert tight_set_at(quad, qp(3, 0)) == frozenset({0, 1})
    assert tight_set_at(quad, qp(2, 1)) == frozenset()


def test_restrict_to_affine(quad):
    I = Subspace.span([(Q(0), Q(1))], 2)
    R = restrict_to_affine(quad, qp(1, 0), I)
    assert vertices(R) == (qp(1, 0), qp(1, 3))
    with pytest.raises(PointNotInPolyhedronError):
        restrict_to_affine(quad, qp(9, 9), I)


def test_restrict_full_space_is_identity(quad):
    R = restrict_to_affine(quad, qp(2, 1), Subspace.full(2))
    assert R == quad


def test_prolong(quad):
    # x interior, y a vertex: u must put x strictly inside [y, u]
    x, y = qp(2, 1), qp(3, 1)
    u = prolong(quad, x, y)
    assert u is not None and contains(quad, u)
    # x on a facet, pushing across it: no prolongation
    x2, y2 = qp(3, 0), (Q(2), Q(1, 2))
    assert prolong(quad, x2, y2) is None
    assert prolong(quad, x, x) == x
