"""Exact linear algebra over the rationals: elimination, rank, nullspaces."""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .rationals import Q, QVec, ZERO, is_zero_vec, unit, vdot


def rref(rows: Sequence[QVec]) -> Tuple[List[QVec], List[int]]:
    """Reduced row echelon form. Returns (nonzero rows, pivot column list)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pv = mat[r][col]
        mat[r] = [a / pv for a in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r]], pivots


def rank(rows: Sequence[QVec]) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Sequence[QVec], ncols: Optional[int] = None) -> List[QVec]:
    """Basis of {x : rows @ x = 0}, via free columns of the RREF."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty row list")
        ncols = len(rows[0])
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = Q(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(tuple(v))
    return basis


def solve_affine(
    lhs: Sequence[QVec], rhs: Sequence, ncols: int
) -> Optional[Tuple[QVec, List[QVec]]]:
    """Solve lhs @ x = rhs. Returns (particular solution, nullspace basis),
    or None when the system is inconsistent."""
    aug = [tuple(row) + (r,) for row, r in zip(lhs, rhs)]
    red, pivots = rref(aug)
    for row, pc in zip(red, pivots):
        if pc == ncols:  # pivot in the augmented column
            return None
    x = [ZERO] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return tuple(x), nullspace([tuple(row) for row in lhs], ncols)


def solve_unique(lhs: Sequence[QVec], rhs: Sequence, ncols: int) -> Optional[QVec]:
    """Solution of a consistent full-rank system; None if inconsistent or
    underdetermined."""
    sol = solve_affine(lhs, rhs, ncols)
    if sol is None:
        return None
    x0, null = sol
    if null:
        return None
    return x0


def span_basis(vectors: Sequence[QVec], ncols: int) -> List[QVec]:
    """Independent spanning subset (RREF rows) of the given vectors."""
    red, _ = rref(list(vectors)) if vectors else ([], [])
    return [r for r in red if not is_zero_vec(r)]


def in_span(v: QVec, basis: Sequence[QVec]) -> bool:
    if is_zero_vec(v):
        return True
    if not basis:
        return False
    return rank(list(basis) + [v]) == rank(list(basis))


def gram_matrix(vectors: Sequence[QVec]) -> List[QVec]:
    return [tuple(vdot(a, b) for b in vectors) for a in vectors]
