"""Subspaces, segments and relative-interior primitives.

A segment [a, b] is the convex hull of its endpoints; its relative
interior is the open segment for a != b and the singleton {a} for a == b.
Subspaces represent search directions and are stored by an independent
basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from . import linalg
from .rationals import Q, QVec, ZERO, is_zero_vec, vadd, vscale, vsub

rank = linalg.rank


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of Q^ambient_dim given by an independent basis.

    The empty basis denotes the zero subspace.
    """

    basis: Tuple[QVec, ...]
    ambient_dim: int

    def __post_init__(self):
        for v in self.basis:
            if len(v) != self.ambient_dim:
                raise ValueError("basis vector length does not match ambient_dim")
        if len(self.basis) != linalg.rank(self.basis):
            raise ValueError("basis vectors must be linearly independent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @staticmethod
    def span(vectors: Sequence[QVec], ambient_dim: int) -> "Subspace":
        """Subspace spanned by arbitrary (possibly dependent) vectors."""
        basis = linalg.span_basis(list(vectors), ambient_dim)
        return Subspace(tuple(basis), ambient_dim)

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace((), ambient_dim)

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        from .rationals import unit

        return Subspace(tuple(unit(ambient_dim, i) for i in range(ambient_dim)), ambient_dim)

    def contains_vector(self, v: QVec) -> bool:
        return linalg.in_span(v, self.basis)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains_vector(v) for v in other.basis)


@dataclass(frozen=True)
class Segment:
    a: QVec
    b: QVec

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise ValueError("segment endpoints must share a dimension")

    @property
    def is_singleton(self) -> bool:
        return self.a == self.b


def orthogonal_complement(sub: Subspace) -> Subspace:
    """Orthogonal complement, so that x + I = {y : N y = N x} for N's rows."""
    if not sub.basis:
        return Subspace.full(sub.ambient_dim)
    comp = linalg.nullspace(sub.basis, sub.ambient_dim)
    return Subspace(tuple(comp), sub.ambient_dim)


def segment_parameter(x: QVec, s: Segment):
    """The alpha with x = (1-alpha) a + alpha b, or None if x is off the
    segment's line or the segment is a singleton != x."""
    if s.is_singleton:
        return Q(0) if x == s.a else None
    d = vsub(s.b, s.a)
    r = vsub(x, s.a)
    alpha = None
    for di, ri in zip(d, r):
        if di != 0:
            alpha = ri / di
            break
    if alpha is None:
        return None
    if vadd(s.a, vscale(alpha, d)) != x:
        return None
    return alpha


def in_segment(x: QVec, s: Segment) -> bool:
    alpha = segment_parameter(x, s)
    if alpha is None:
        return s.is_singleton and x == s.a
    return 0 <= alpha <= 1


def in_relative_interior_of_segment(x: QVec, s: Segment) -> bool:
    """x in ri[a,b]: strictly between the endpoints, or x = a = b."""
    if s.is_singleton:
        return x == s.a
    alpha = segment_parameter(x, s)
    return alpha is not None and 0 < alpha < 1


def xyzu_witness(y: QVec, z: QVec, u: QVec, x: QVec, alpha) -> QVec:
    """Given x = (1-alpha) u + alpha y with 0 < alpha < 1, produce the point
    v = (1-alpha) u + alpha z, which lies in both ri[u,z] and ri[x, x+z-y]."""
    alpha = Q(alpha)
    if not (0 < alpha < 1):
        raise ValueError("alpha must lie strictly between 0 and 1")
    expect = vadd(vscale(1 - alpha, u), vscale(alpha, y))
    if expect != x:
        raise ValueError("x != (1-alpha) u + alpha y")
    return vadd(vscale(1 - alpha, u), vscale(alpha, z))
