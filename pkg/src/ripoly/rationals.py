"""Exact rational scalars and coordinate vectors.

All core arithmetic in this package is exact: scalars are rationals kept
in lowest terms with positive denominator, vectors are fixed-length tuples
of rationals. Floats never enter the core logic; they appear only in
distance reporting.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

try:
    from gmpy2 import mpq as _mpq

    def Q(num, den=None):
        if den is None:
            return _mpq(num)
        return _mpq(num, den)

    _RAT_TYPES = None  # gmpy2 mpq interops with int transparently
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _Fraction

    def Q(num, den=None):
        if den is None:
            return _Fraction(num)
        return _Fraction(num, den)


QVec = Tuple  # tuple of rationals, length = ambient dimension

ZERO = Q(0)
ONE = Q(1)


def rat_from_str(s: str):
    """Parse "p/q" or "p" into an exact rational."""
    return Q(s.strip())


def rat_to_str(r) -> str:
    """Serialize a rational as "p/q", or "p" when the denominator is 1."""
    return str(Q(r))


def qvec(coords: Iterable) -> QVec:
    return tuple(Q(c) for c in coords)


def vadd(x: QVec, y: QVec) -> QVec:
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: QVec, y: QVec) -> QVec:
    return tuple(a - b for a, b in zip(x, y))


def vscale(t, x: QVec) -> QVec:
    t = Q(t)
    return tuple(t * a for a in x)


def vdot(x: QVec, y: QVec):
    return sum((a * b for a, b in zip(x, y)), ZERO)


def vzero(n: int) -> QVec:
    return (ZERO,) * n


def unit(n: int, i: int) -> QVec:
    return tuple(ONE if j == i else ZERO for j in range(n))


def is_zero_vec(x: QVec) -> bool:
    return all(a == 0 for a in x)


def vec_from_strs(coords: Sequence[str]) -> QVec:
    return tuple(rat_from_str(c) for c in coords)


def vec_to_strs(x: QVec) -> list:
    return [rat_to_str(c) for c in x]
