"""Randomized structural properties of the face machinery, plus small runs
of every named verification suite."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ripoly import (
    Q,
    contains,
    poly_dim,
    relative_interior_point,
    ri_membership,
    smallest_face,
    vertices,
)
from ripoly.polyhedron import face_polyhedron, is_empty, prolong, tight_set_at
from ripoly.randgen import probe_points, random_polytope
from ripoly.rationals import vadd, vscale
from ripoly.verify import SUITE_NAMES, run_suite

seeds = st.integers(min_value=0, max_value=10**6)


def draw_polytope(seed, dim=2, max_vertices=8):
    rng = random.Random(f"prop:{seed}")
    P, _ = random_polytope(rng, dim, max_vertices)
    return P


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_ri_point_is_member(seed):
    P = draw_polytope(seed)
    assert ri_membership(P, relative_interior_point(P))


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_smallest_face_contains_point_in_ri(seed):
    P = draw_polytope(seed)
    for x in probe_points(P):
        F = face_polyhedron(P, smallest_face(P, x).tight_set)
        assert ri_membership(F, x)


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_face_dims_consistent(seed):
    P = draw_polytope(seed)
    for v in vertices(P):
        assert smallest_face(P, v).dim == 0
    assert smallest_face(P, relative_interior_point(P)).dim == poly_dim(P)


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_face_meet_closure_2d(seed):
    """Canonical tight sets are meet-closed: intersecting two faces yields
    either the empty set or another face with the canonical tight set."""
    P = draw_polytope(seed)
    descs = {smallest_face(P, x).tight_set for x in probe_points(P)}
    for ta, tb in itertools.combinations(descs, 2):
        meet = face_polyhedron(P, ta | tb)
        if is_empty(meet):
            continue
        z = relative_interior_point(meet)
        canon = smallest_face(P, z).tight_set
        assert canon >= ta | tb
        # the canonical set describes the same face
        assert not is_empty(face_polyhedron(P, canon))


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_prolong_witnesses_ri_position(seed):
    from ripoly.geometry import Segment, in_relative_interior_of_segment

    P = draw_polytope(seed)
    z = relative_interior_point(P)
    for v in vertices(P):
        u = prolong(P, z, v)
        assert u is not None and contains(P, u)
        assert in_relative_interior_of_segment(z, Segment(v, u))


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_midpoint_face_is_superface(seed):
    """The smallest face of a midpoint contains both endpoints' faces'
    intersection pattern: its tight set is contained in each endpoint's."""
    P = draw_polytope(seed)
    verts = vertices(P)
    for a, b in itertools.combinations(verts, 2):
        mid = vscale(Q(1, 2), vadd(a, b))
        if not contains(P, mid):
            continue
        tm = smallest_face(P, mid).tight_set
        assert tm <= smallest_face(P, a).tight_set
        assert tm <= smallest_face(P, b).tight_set


@pytest.mark.parametrize("suite", SUITE_NAMES)
def test_verification_suites_smoke(suite):
    results = run_suite(suite, 2024, 3)
    assert all(r.ok for r in results), [r.detail for r in results if not r.ok]
