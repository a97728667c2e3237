"""Seeded random instance generation for property suites and tests.

Polytopes are generated vertex-first (random rational points in a box) and
converted to an H-representation by brute-force facet enumeration over
vertex subsets, so the generator stays independent of the H-rep pipeline
under test. PRNG: Python's Mersenne Twister via random.Random(seed).
"""

from __future__ import annotations

import itertools
import random
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .descent import DirectionSet
from .diffusion import PairwiseModel
from .epigraph import PiecewiseAffine
from .geometry import Subspace
from .lp import LinearObjective
from .polyhedron import Polyhedron
from .rationals import Q, QVec, ZERO, qvec, vdot, vsub

PRNG_ID = "python-random-mt19937"


def random_rational(rng: random.Random, lo=-8, hi=8, max_den=2):
    return Q(rng.randint(lo, hi), rng.randint(1, max_den))


def random_point(rng: random.Random, dim: int, lo=-8, hi=8, max_den=2) -> QVec:
    return tuple(random_rational(rng, lo, hi, max_den) for _ in range(dim))


def hull_to_hrep(points: Sequence[QVec], dim: int) -> Optional[Polyhedron]:
    """H-representation of a full-dimensional convex hull, by checking every
    dim-subset's hyperplane for validity. Returns None if the points are not
    full-dimensional."""
    pts = list(points)
    if linalg.rank([vsub(p, pts[0]) for p in pts[1:]]) < dim:
        return None
    facets = {}
    for combo in itertools.combinations(range(len(pts)), dim):
        base = pts[combo[0]]
        rows = [vsub(pts[i], base) for i in combo[1:]]
        normals = linalg.nullspace(rows, dim) if rows else linalg.nullspace([], dim)
        if len(normals) != 1:
            continue
        a = normals[0]
        b = vdot(a, base)
        has_lt = any(vdot(a, p) < b for p in pts)
        has_gt = any(vdot(a, p) > b for p in pts)
        if has_lt and has_gt:
            continue
        if has_gt:  # orient so that all points satisfy a.x <= b
            a = tuple(-c for c in a)
            b = -b
        # positive scaling to a canonical form for dedup
        lead = next(c for c in a if c != 0)
        scale = Q(1) / abs(lead)
        facets[(tuple(scale * c for c in a), scale * b)] = None
    ineqs = [(a, b) for a, b in facets]
    return Polyhedron.make(ineqs, [], dim)


def random_polytope(
    rng: random.Random, dim: int, max_vertices: int = 8
) -> Tuple[Polyhedron, List[QVec]]:
    """Full-dimensional random polytope; returns (H-rep, generating points).

    The generating points include all vertices of the polytope (possibly
    with interior points mixed in)."""
    while True:
        n = rng.randint(dim + 1, max_vertices)
        pts = [random_point(rng, dim) for _ in range(n)]
        P = hull_to_hrep(pts, dim)
        if P is not None:
            return P, pts


def random_objective(rng: random.Random, dim: int) -> LinearObjective:
    while True:
        c = tuple(Q(rng.randint(-4, 4)) for _ in range(dim))
        if any(x != 0 for x in c):
            return LinearObjective(c)


def random_subspace(rng: random.Random, dim: int, max_dim: Optional[int] = None) -> Subspace:
    k = rng.randint(0, max_dim if max_dim is not None else dim)
    vecs = [tuple(Q(rng.randint(-3, 3)) for _ in range(dim)) for _ in range(k)]
    return Subspace.span(vecs, dim)


def random_direction_set(rng: random.Random, dim: int) -> DirectionSet:
    """Coordinate axes, optionally with a couple of random subspaces mixed in."""
    dirs = list(DirectionSet.coordinate_axes(dim).directions)
    for _ in range(rng.randint(0, 2)):
        S = random_subspace(rng, dim, max_dim=dim - 1)
        if S.basis:
            dirs.append(S)
    rng.shuffle(dirs)
    return DirectionSet(tuple(dirs))


def random_pwa(rng: random.Random, dim: int, max_pieces: int = 4) -> PiecewiseAffine:
    n = rng.randint(1, max_pieces)
    pieces = tuple(
        (tuple(Q(rng.randint(-3, 3)) for _ in range(dim)), Q(rng.randint(-4, 4)))
        for _ in range(n)
    )
    return PiecewiseAffine(pieces)


def random_model(rng: random.Random, max_nodes: int = 4, max_labels: int = 3) -> PairwiseModel:
    n = rng.randint(2, max_nodes)
    labels = tuple(rng.randint(2, max_labels) for _ in range(n))
    # spanning tree plus possibly one extra edge
    edges = [(rng.randrange(u), u) for u in range(1, n)]
    edges = [(min(a, b), max(a, b)) for a, b in edges]
    if n >= 3 and rng.random() < 0.5:
        extra = tuple(sorted(rng.sample(range(n), 2)))
        if extra not in edges:
            edges.append(extra)
    unary = tuple(
        tuple(Q(rng.randint(-5, 5)) for _ in range(labels[u])) for u in range(n)
    )
    pairwise = tuple(
        tuple(
            tuple(Q(rng.randint(-5, 5)) for _ in range(labels[v]))
            for _ in range(labels[u])
        )
        for u, v in edges
    )
    return PairwiseModel(labels, unary, tuple(edges), pairwise)


def probe_points(P: Polyhedron, include_ri: bool = True) -> List[QVec]:
    """Vertices, contained pairwise midpoints, and a relative interior
    point: a cheap sample hitting faces of several dimensions."""
    from .polyhedron import contains, relative_interior_point, vertices
    from .rationals import vadd, vscale

    verts = list(vertices(P))
    pts = list(verts)
    for a, b in itertools.combinations(verts, 2):
        mid = vscale(Q(1, 2), vadd(a, b))
        if contains(P, mid):
            pts.append(mid)
    if include_ri and verts:
        pts.append(relative_interior_point(P))
    seen = {}
    for p in pts:
        seen[p] = None
    return list(seen)
