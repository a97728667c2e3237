"""H-representation polyhedra with exact face structure.

A polyhedron is {x : Ax <= b, Ex = d}. Emptiness is a queryable state, not
an invalid object. Faces are identified by canonical tight sets: the set
of inequality indices tight on the *entire* face, so two descriptors are
equal iff the faces are. Redundant inequality rows are permitted; the
slack-LP machinery handles them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import FrozenSet, List, Optional, Sequence, Tuple

from . import linalg
from .errors import (
    DimensionTooLargeError,
    EmptyPolyhedronError,
    PointNotInPolyhedronError,
    UnboundedPolyhedronError,
)
from .geometry import Subspace, orthogonal_complement
from .rationals import Q, QVec, ZERO, qvec, unit, vadd, vdot, vscale, vsub, vzero

VERTEX_ENUM_MAX_DIM = 6


@dataclass(frozen=True)
class Polyhedron:
    ineq_lhs: Tuple[QVec, ...]
    ineq_rhs: Tuple
    eq_lhs: Tuple[QVec, ...]
    eq_rhs: Tuple
    ambient_dim: int

    @staticmethod
    def make(ineqs: Sequence[Tuple[Sequence, object]],
             eqs: Sequence[Tuple[Sequence, object]],
             ambient_dim: int) -> "Polyhedron":
        """Build from (row, rhs) pairs; coerces entries to exact rationals."""
        A = tuple(qvec(a) for a, _ in ineqs)
        b = tuple(Q(v) for _, v in ineqs)
        E = tuple(qvec(a) for a, _ in eqs)
        d = tuple(Q(v) for _, v in eqs)
        for row in A + E:
            if len(row) != ambient_dim:
                raise ValueError("constraint row length != ambient_dim")
        return Polyhedron(A, b, E, d, ambient_dim)

    @staticmethod
    def box(lo: Sequence, hi: Sequence) -> "Polyhedron":
        n = len(lo)
        ineqs = []
        for i in range(n):
            ineqs.append((unit(n, i), Q(hi[i])))
            ineqs.append((vscale(-1, unit(n, i)), -Q(lo[i])))
        return Polyhedron.make(ineqs, [], n)

    def with_equalities(self, lhs: Sequence[QVec], rhs: Sequence) -> "Polyhedron":
        return Polyhedron(
            self.ineq_lhs,
            self.ineq_rhs,
            self.eq_lhs + tuple(tuple(r) for r in lhs),
            self.eq_rhs + tuple(Q(v) for v in rhs),
            self.ambient_dim,
        )

    def with_inequalities(self, lhs: Sequence[QVec], rhs: Sequence) -> "Polyhedron":
        return Polyhedron(
            self.ineq_lhs + tuple(tuple(r) for r in lhs),
            self.ineq_rhs + tuple(Q(v) for v in rhs),
            self.eq_lhs,
            self.eq_rhs,
            self.ambient_dim,
        )

    def intersection(self, other: "Polyhedron") -> "Polyhedron":
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Polyhedron(
            self.ineq_lhs + other.ineq_lhs,
            self.ineq_rhs + other.ineq_rhs,
            self.eq_lhs + other.eq_lhs,
            self.eq_rhs + other.eq_rhs,
            self.ambient_dim,
        )


@dataclass(frozen=True)
class FaceDescriptor:
    """Canonical identification of a face: every inequality index tight on
    the whole face, plus the face's exact dimension."""

    tight_set: FrozenSet[int]
    dim: int


class FaceRelation(Enum):
    EQUAL_FACE = "equal_face"
    PROPER_SUBFACE = "proper_subface"
    PROPER_SUPERFACE = "proper_superface"
    INCOMPARABLE = "incomparable"


# ---------------------------------------------------------------------------


def contains(P: Polyhedron, x: QVec) -> bool:
    if len(x) != P.ambient_dim:
        raise ValueError("point dimension mismatch")
    return all(vdot(a, x) <= b for a, b in zip(P.ineq_lhs, P.ineq_rhs)) and all(
        vdot(e, x) == d for e, d in zip(P.eq_lhs, P.eq_rhs)
    )


def is_empty(P: Polyhedron) -> bool:
    from . import lp

    out = lp.solve(P, lp.LinearObjective(vzero(P.ambient_dim)))
    return out.status == lp.LpStatus.INFEASIBLE


def feasible_point(P: Polyhedron) -> QVec:
    from . import lp

    out = lp.solve(P, lp.LinearObjective(vzero(P.ambient_dim)))
    if out.status != lp.LpStatus.OPTIMAL:
        raise EmptyPolyhedronError("polyhedron is empty")
    return out.point


def _max_truncated_slack(rows, rhs, i, k):
    """max s s.t. rows.lam <= rhs, row_i.lam + s <= rhs_i, 0 <= s <= 1.

    Works in the equality-free parameter space; returns (s*, lam*)."""
    from . import lp

    ext_rows: List[QVec] = []
    ext_rhs: List = []
    for j, (r, b) in enumerate(zip(rows, rhs)):
        ext_rows.append(tuple(r) + (ZERO,))
        ext_rhs.append(b)
    ext_rows.append(tuple(rows[i]) + (Q(1),))
    ext_rhs.append(rhs[i])
    ext_rows.append(vzero(k) + (Q(1),))
    ext_rhs.append(Q(1))
    ext_rows.append(vzero(k) + (Q(-1),))
    ext_rhs.append(ZERO)
    c = vzero(k) + (Q(-1),)
    status, y, val = lp.simplex_min(ext_rows, ext_rhs, c, k + 1)
    assert status == lp.LpStatus.OPTIMAL
    return -val, y[:k]


@lru_cache(maxsize=None)
def implicit_equalities(P: Polyhedron) -> FrozenSet[int]:
    """Indices i with a_i . x = b_i on all of P, decided by maximizing the
    (truncated) slack of each row."""
    from . import lp

    red = lp.reduced_system(P)
    if red is None:
        raise EmptyPolyhedronError("equality system is inconsistent")
    x0, bas, rows, rhs = red
    k = len(bas)
    live = [j for j, r in enumerate(rows) if any(a != 0 for a in r)]
    live_set = set(live)
    # constant rows decide themselves; a violated one means P is empty
    out = set()
    for j, (r, b) in enumerate(zip(rows, rhs)):
        if j in live_set:
            continue
        if b < 0:
            raise EmptyPolyhedronError("polyhedron is empty")
        if b == 0:
            out.add(j)
    if live and is_empty(P):
        raise EmptyPolyhedronError("polyhedron is empty")
    live_rows = [rows[j] for j in live]
    live_rhs = [rhs[j] for j in live]
    for pos, j in enumerate(live):
        smax, _ = _max_truncated_slack(live_rows, live_rhs, pos, k)
        if smax == 0:
            out.add(j)
    return frozenset(out)


def ri_membership(P: Polyhedron, x: QVec) -> bool:
    """x in ri P: feasible with strict slack on every non-implicit row."""
    if not contains(P, x):
        return False
    impl = implicit_equalities(P)
    for i, (a, b) in enumerate(zip(P.ineq_lhs, P.ineq_rhs)):
        if i not in impl and vdot(a, x) == b:
            return False
    return True


class RiStrategy(Enum):
    SLACK_AVERAGE = "slack_average"
    VERTEX_BARYCENTER = "vertex_barycenter"


def relative_interior_point(
    P: Polyhedron, strategy: RiStrategy = RiStrategy.SLACK_AVERAGE
) -> QVec:
    """A point of ri P. SLACK_AVERAGE averages per-row max-slack points and
    works for unbounded sets; VERTEX_BARYCENTER is the deterministic vertex
    average and requires boundedness."""
    from . import lp

    if strategy is RiStrategy.VERTEX_BARYCENTER:
        verts = vertices(P)
        if not verts:
            raise EmptyPolyhedronError("polyhedron is empty")
        n = len(verts)
        acc = verts[0]
        for v in verts[1:]:
            acc = vadd(acc, v)
        return vscale(Q(1, n), acc)

    impl = implicit_equalities(P)  # raises on empty
    red = lp.reduced_system(P)
    x0, bas, rows, rhs = red
    k = len(bas)
    live = [j for j, r in enumerate(rows) if any(a != 0 for a in r)]
    # implicit rows stay as constraints; only non-implicit slacks get pushed
    free = [pos for pos, j in enumerate(live) if j not in impl]
    if not free or k == 0:
        return feasible_point(P)
    live_rows = [rows[j] for j in live]
    live_rhs = [rhs[j] for j in live]
    pts = []
    for pos in free:
        smax, lam = _max_truncated_slack(live_rows, live_rhs, pos, k)
        assert smax > 0  # row is non-implicit
        pts.append(lam)
    acc = pts[0]
    for p in pts[1:]:
        acc = vadd(acc, p)
    lam_avg = vscale(Q(1, len(pts)), acc)
    x = x0
    for t, bv in zip(lam_avg, bas):
        x = vadd(x, vscale(t, bv))
    return x


def tight_set_at(P: Polyhedron, x: QVec) -> FrozenSet[int]:
    return frozenset(
        i for i, (a, b) in enumerate(zip(P.ineq_lhs, P.ineq_rhs)) if vdot(a, x) == b
    )


def face_polyhedron(P: Polyhedron, tight: FrozenSet[int]) -> Polyhedron:
    """The face of P on which the given inequality rows hold with equality."""
    lhs = [P.ineq_lhs[i] for i in sorted(tight)]
    rhs = [P.ineq_rhs[i] for i in sorted(tight)]
    return P.with_equalities(lhs, rhs)


@lru_cache(maxsize=None)
def smallest_face(P: Polyhedron, x: QVec) -> FaceDescriptor:
    """F(P, x): canonical tight set of the smallest face containing x."""
    if not contains(P, x):
        raise PointNotInPolyhedronError(f"{x} not in polyhedron")
    t0 = tight_set_at(P, x)
    face = face_polyhedron(P, t0)
    canonical = implicit_equalities(face)
    stacked = list(P.eq_lhs) + [P.ineq_lhs[i] for i in sorted(canonical)]
    dim = P.ambient_dim - linalg.rank(stacked) if stacked else P.ambient_dim
    return FaceDescriptor(frozenset(canonical), dim)


def face_relation(P: Polyhedron, x: QVec, y: QVec) -> FaceRelation:
    """Relation of F(P,x) to F(P,y) via canonical tight-set inclusion
    (reversed: a larger tight set is a smaller face)."""
    fx = smallest_face(P, x).tight_set
    fy = smallest_face(P, y).tight_set
    if fx == fy:
        return FaceRelation.EQUAL_FACE
    if fx > fy:  # x's face is strictly smaller
        return FaceRelation.PROPER_SUBFACE
    if fx < fy:
        return FaceRelation.PROPER_SUPERFACE
    return FaceRelation.INCOMPARABLE


@lru_cache(maxsize=None)
def poly_dim(P: Polyhedron) -> int:
    """Affine dimension of a nonempty polyhedron."""
    impl = implicit_equalities(P)
    stacked = list(P.eq_lhs) + [P.ineq_lhs[i] for i in sorted(impl)]
    if not stacked:
        return P.ambient_dim
    return P.ambient_dim - linalg.rank(stacked)


@lru_cache(maxsize=None)
def is_bounded(P: Polyhedron) -> bool:
    from . import lp

    for i in range(P.ambient_dim):
        for sign in (1, -1):
            c = vscale(sign, unit(P.ambient_dim, i))
            out = lp.solve(P, lp.LinearObjective(c))
            if out.status == lp.LpStatus.UNBOUNDED:
                return False
            if out.status == lp.LpStatus.INFEASIBLE:
                return True  # empty is bounded
    return True


@lru_cache(maxsize=None)
def vertices(P: Polyhedron) -> Tuple[QVec, ...]:
    """All basic feasible solutions, by brute-force enumeration of
    maximal-rank active sets. Oracle-grade: guarded to small dimensions."""
    if P.ambient_dim > VERTEX_ENUM_MAX_DIM:
        raise DimensionTooLargeError(
            f"vertex enumeration limited to dim <= {VERTEX_ENUM_MAX_DIM}"
        )
    if not is_bounded(P):
        raise UnboundedPolyhedronError("vertex enumeration requires boundedness")
    if is_empty(P):
        return ()
    base = list(P.eq_lhs)
    r0 = linalg.rank(base) if base else 0
    need = P.ambient_dim - r0
    found = set()
    m = len(P.ineq_lhs)
    for combo in itertools.combinations(range(m), need):
        lhs = base + [P.ineq_lhs[i] for i in combo]
        rhs = list(P.eq_rhs) + [P.ineq_rhs[i] for i in combo]
        if linalg.rank(lhs) < P.ambient_dim:
            continue
        x = linalg.solve_unique(lhs, rhs, P.ambient_dim)
        if x is not None and contains(P, x):
            found.add(x)
    return tuple(sorted(found))


def restrict_to_affine(P: Polyhedron, x: QVec, I: Subspace) -> Polyhedron:
    """P intersected with the affine subspace x + I."""
    if not contains(P, x):
        raise PointNotInPolyhedronError(f"{x} not in polyhedron")
    if I.ambient_dim != P.ambient_dim:
        raise ValueError("subspace ambient dimension mismatch")
    N = orthogonal_complement(I)
    if not N.basis:
        return P
    return P.with_equalities(list(N.basis), [vdot(n, x) for n in N.basis])


def prolong(P: Polyhedron, x: QVec, y: QVec) -> Optional[QVec]:
    """A point u in P with x in ri[y, u], found by the ratio test on the ray
    from y through x. Returns None when x cannot be prolonged past itself."""
    if not contains(P, x):
        raise PointNotInPolyhedronError(f"{x} not in polyhedron")
    if not contains(P, y):
        raise PointNotInPolyhedronError(f"{y} not in polyhedron")
    if x == y:
        return x
    d = vsub(x, y)  # u = x + t d, t > 0
    tmax = Q(1)
    for a, b in zip(P.ineq_lhs, P.ineq_rhs):
        ad = vdot(a, d)
        if ad > 0:
            bound = (b - vdot(a, x)) / ad
            if bound < tmax:
                tmax = bound
    if tmax == 0:
        return None
    return vadd(x, vscale(tmax / 2, d))
