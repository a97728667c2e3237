"""Exact rational linear programming.

Minimizes a linear functional over an H-representation polyhedron. The
solver eliminates equality constraints by exact substitution, then runs a
dense two-phase primal simplex with Bland's anti-cycling rule over the
remaining free variables (split into nonnegative pairs plus slacks).
Everything is deterministic: fixed variable order, lowest-index pivots.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .errors import NotOptimalError
from .polyhedron import Polyhedron
from .rationals import Q, QVec, ZERO, vadd, vdot, vscale


class LpStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LinearObjective:
    c: QVec

    def value_at(self, x: QVec):
        return vdot(self.c, x)


@dataclass(frozen=True)
class LpOutcome:
    status: LpStatus
    point: Optional[QVec] = None
    value: Optional[object] = None


# ---------------------------------------------------------------------------
# raw simplex over free variables with inequality rows only


def simplex_min(rows: Sequence[QVec], rhs: Sequence, c: QVec, nvars: int):
    """min c.y  s.t. rows.y <= rhs, y free.

    Returns (status, y, value). Free variables are split y = u - v; a slack
    is added per row; feasibility comes from a phase-1 artificial basis.
    """
    m = len(rows)
    if nvars == 0:
        if all(b >= 0 for b in rhs):
            return LpStatus.OPTIMAL, (), ZERO
        return LpStatus.INFEASIBLE, None, None

    nstruct = 2 * nvars + m  # u, v, slack
    ncols = nstruct + m  # + artificials
    # tableau rows: coefficients over all columns plus rhs
    tab: List[List] = []
    basis: List[int] = []
    for i in range(m):
        row = [ZERO] * (ncols + 1)
        sign = Q(1) if rhs[i] >= 0 else Q(-1)
        for j in range(nvars):
            a = sign * rows[i][j]
            row[j] = a
            row[nvars + j] = -a
        row[2 * nvars + i] = sign  # slack
        row[nstruct + i] = Q(1)  # artificial
        row[ncols] = sign * rhs[i]
        tab.append(row)
        basis.append(nstruct + i)

    def reduce_objective(costs):
        # reduced costs z_j = c_j - sum_i c_{basis_i} * tab[i][j]
        obj = list(costs) + [ZERO]
        for i, bi in enumerate(basis):
            cb = costs[bi]
            if cb != 0:
                for j in range(ncols + 1):
                    if tab[i][j] != 0:
                        obj[j] -= cb * tab[i][j]
        return obj

    def pivot(obj, r, col):
        pv = tab[r][col]
        tab[r] = [a / pv for a in tab[r]]
        for i in range(m):
            if i != r and tab[i][col] != 0:
                f = tab[i][col]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[r])]
        if obj[col] != 0:
            f = obj[col]
            for j in range(ncols + 1):
                obj[j] -= f * tab[r][j]
        basis[r] = col

    def iterate(obj, allowed_cols):
        while True:
            enter = -1
            for j in allowed_cols:
                if obj[j] < 0:
                    enter = j
                    break
            if enter < 0:
                return LpStatus.OPTIMAL
            # Bland ratio test: min rhs/coef over positive coefs, ties by
            # smallest basis variable index
            best_r = -1
            best_ratio = None
            for i in range(m):
                a = tab[i][enter]
                if a > 0:
                    ratio = tab[i][ncols] / a
                    if (
                        best_r < 0
                        or ratio < best_ratio
                        or (ratio == best_ratio and basis[i] < basis[best_r])
                    ):
                        best_r = i
                        best_ratio = ratio
            if best_r < 0:
                return LpStatus.UNBOUNDED
            pivot(obj, best_r, enter)

    # phase 1: minimize sum of artificials
    costs1 = [ZERO] * ncols
    for j in range(nstruct, ncols):
        costs1[j] = Q(1)
    obj1 = reduce_objective(costs1)
    status = iterate(obj1, range(nstruct))
    assert status == LpStatus.OPTIMAL  # bounded below by 0
    if -obj1[ncols] > 0:
        return LpStatus.INFEASIBLE, None, None
    # drive any artificial still in the basis out (it sits at value 0)
    for i in range(m):
        if basis[i] >= nstruct:
            piv_col = -1
            for j in range(nstruct):
                if tab[i][j] != 0:
                    piv_col = j
                    break
            if piv_col >= 0:
                pivot(obj1, i, piv_col)
            # else: redundant row; the artificial stays basic at zero and
            # never re-enters because artificials are excluded below

    # phase 2
    costs2 = [ZERO] * ncols
    for j in range(nvars):
        costs2[j] = c[j]
        costs2[nvars + j] = -c[j]
    obj2 = reduce_objective(costs2)
    status = iterate(obj2, range(nstruct))
    if status == LpStatus.UNBOUNDED:
        return LpStatus.UNBOUNDED, None, None
    y = [ZERO] * nvars
    for i, bi in enumerate(basis):
        val = tab[i][ncols]
        if bi < nvars:
            y[bi] += val
        elif bi < 2 * nvars:
            y[bi - nvars] -= val
    y = tuple(y)
    return LpStatus.OPTIMAL, y, vdot(c, y)


# ---------------------------------------------------------------------------
# equality presolve

_presolve_cache: dict = {}


def _eliminate_equalities(P: Polyhedron):
    """Parametrize {x : Ex = d} as x0 + B * lam. Cached per equality system.

    Returns (x0, basis columns) or None when the equalities are inconsistent.
    """
    key = (P.eq_lhs, P.eq_rhs, P.ambient_dim)
    if key in _presolve_cache:
        return _presolve_cache[key]
    if not P.eq_lhs:
        from .rationals import unit, vzero

        res = (vzero(P.ambient_dim), [unit(P.ambient_dim, i) for i in range(P.ambient_dim)])
    else:
        res = linalg.solve_affine(P.eq_lhs, P.eq_rhs, P.ambient_dim)
    _presolve_cache[key] = res
    return res


def reduced_system(P: Polyhedron):
    """Inequalities of P pulled back to the equality-free parameter space.

    Returns (x0, basis, rows, rhs) with rows[i] = A_i B and
    rhs[i] = b_i - A_i x0, or None when P's equalities are inconsistent.
    Zero rows are kept so that row indices stay aligned with P.
    """
    sol = _eliminate_equalities(P)
    if sol is None:
        return None
    x0, bas = sol
    rows = []
    rhs = []
    for a, b in zip(P.ineq_lhs, P.ineq_rhs):
        rows.append(tuple(vdot(a, bv) for bv in bas))
        rhs.append(b - vdot(a, x0))
    return x0, bas, rows, rhs


def _lift(x0: QVec, bas, y: QVec) -> QVec:
    x = x0
    for t, bv in zip(y, bas):
        if t != 0:
            x = vadd(x, vscale(t, bv))
    return x


def solve(P: Polyhedron, obj: LinearObjective) -> LpOutcome:
    """Exact minimum of <c, x> over P with a certified status."""
    c = obj.c
    if len(c) != P.ambient_dim:
        raise ValueError("objective dimension mismatch")
    red = reduced_system(P)
    if red is None:
        return LpOutcome(LpStatus.INFEASIBLE)
    x0, bas, rows, rhs = red
    k = len(bas)
    # drop constant rows; a violated constant row makes P empty
    live_rows = []
    live_rhs = []
    for r, b in zip(rows, rhs):
        if all(a == 0 for a in r):
            if b < 0:
                return LpOutcome(LpStatus.INFEASIBLE)
        else:
            live_rows.append(r)
            live_rhs.append(b)
    cred = tuple(vdot(c, bv) for bv in bas)
    if k == 0:
        return LpOutcome(LpStatus.OPTIMAL, x0, vdot(c, x0))
    status, y, val = simplex_min(live_rows, live_rhs, cred, k)
    if status != LpStatus.OPTIMAL:
        return LpOutcome(status)
    x = _lift(x0, bas, y)
    return LpOutcome(LpStatus.OPTIMAL, x, vdot(c, x))


def optimal_face(P: Polyhedron, obj: LinearObjective) -> Polyhedron:
    """The face M(P, <c,.>) of P, as P with the optimal-value equality added."""
    out = solve(P, obj)
    if out.status != LpStatus.OPTIMAL:
        raise NotOptimalError(f"LP status is {out.status.value}")
    return P.with_equalities([obj.c], [out.value])
