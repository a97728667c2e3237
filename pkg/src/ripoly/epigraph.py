"""Epigraph lifting for convex piecewise-affine objectives.

Minimizing f(x) = max_k (<g_k, x> + h_k) over a polyhedron X becomes a
linear problem: minimize the last coordinate t over
{(x, t) : x in X, <g_k, x> + h_k <= t for all k}. The t-coordinate is
always appended last; direction lifting and projection follow that
convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .geometry import Subspace
from .lp import LinearObjective
from .polyhedron import Polyhedron
from .rationals import Q, QVec, ZERO, unit, vdot


@dataclass(frozen=True)
class PiecewiseAffine:
    """f(x) = max over pieces of <g, x> + h; convex by construction."""

    pieces: Tuple[Tuple[QVec, object], ...]

    def __post_init__(self):
        if not self.pieces:
            raise ValueError("piece list must be nonempty")

    @property
    def dim(self) -> int:
        return len(self.pieces[0][0])

    def value_at(self, x: QVec):
        return max(vdot(g, x) + h for g, h in self.pieces)


@dataclass(frozen=True)
class EpigraphProblem:
    lifted: Polyhedron  # constraints of X plus one row per piece, dim n+1
    objective: LinearObjective  # projection on the t-coordinate


def lift(X: Polyhedron, f: PiecewiseAffine) -> EpigraphProblem:
    n = X.ambient_dim
    if f.dim != n:
        raise ValueError("objective dimension mismatch")
    ineq_lhs = [tuple(a) + (ZERO,) for a in X.ineq_lhs]
    ineq_rhs = list(X.ineq_rhs)
    for g, h in f.pieces:
        ineq_lhs.append(tuple(g) + (Q(-1),))
        ineq_rhs.append(-Q(h))
    eq_lhs = [tuple(e) + (ZERO,) for e in X.eq_lhs]
    lifted = Polyhedron(
        tuple(ineq_lhs), tuple(ineq_rhs), tuple(eq_lhs), X.eq_rhs, n + 1
    )
    return EpigraphProblem(lifted, LinearObjective(unit(n + 1, n)))


def lift_direction(I: Subspace) -> Subspace:
    """I x R: basis extended by zeros plus the t-axis."""
    n = I.ambient_dim
    basis = [tuple(v) + (ZERO,) for v in I.basis]
    basis.append(unit(n + 1, n))
    return Subspace(tuple(basis), n + 1)


def lift_point(x: QVec, f: PiecewiseAffine) -> QVec:
    """(x, f(x)), the t-minimal lifted point over {x}."""
    return tuple(x) + (f.value_at(x),)


def project_down(pt: QVec) -> QVec:
    """Drop the t-coordinate."""
    return tuple(pt[:-1])
