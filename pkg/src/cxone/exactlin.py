"""Exact rational linear algebra over ``fractions.Fraction``.

Vectors are tuples of ``Fraction`` and matrices are tuples of row vectors.
Nothing in this package touches floating point; `to_rational` refuses floats
outright so that an accidental ``0.1`` cannot leak into a predicate.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction
RationalVec = tuple[Fraction, ...]
RationalMat = tuple[RationalVec, ...]
IntVec = tuple[int, ...]


class DimensionError(ValueError):
    """Vectors or matrices of incompatible sizes were combined."""


def to_rational(x) -> Fraction:
    """Coerce ``int``, ``Fraction`` or a ``"p/q"`` string to a Fraction."""
    if isinstance(x, bool):
        raise TypeError(f"refusing boolean as a rational: {x!r}")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError:
            raise ValueError(f"not a rational literal: {x!r}") from None
    raise TypeError(f"refusing non-exact value {x!r} of type {type(x).__name__}")


def fmt_rational(q: Fraction) -> str:
    """Serialize as ``"p/q"``, dropping the denominator when it is 1."""
    q = to_rational(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def vec(xs: Iterable) -> RationalVec:
    return tuple(to_rational(x) for x in xs)


def mat(rows: Iterable[Iterable]) -> RationalMat:
    out = tuple(vec(r) for r in rows)
    if out and len({len(r) for r in out}) != 1:
        raise DimensionError("ragged matrix")
    return out


def zero(n: int) -> RationalVec:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> RationalVec:
    return tuple(Fraction(int(j == i)) for j in range(n))


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"dot of lengths {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> RationalVec:
    if len(u) != len(v):
        raise DimensionError(f"add of lengths {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> RationalVec:
    if len(u) != len(v):
        raise DimensionError(f"sub of lengths {len(u)} and {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence[Fraction]) -> RationalVec:
    c = to_rational(c)
    return tuple(c * a for a in v)


def lincomb(coeffs: Sequence[Fraction], vectors: Sequence[Sequence[Fraction]], n: int) -> RationalVec:
    """``sum(c_i * v_i)`` in dimension ``n`` (needed when the list is empty)."""
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors, strict=True):
        if len(v) != n:
            raise DimensionError(f"expected length {n}, got {len(v)}")
        for k, a in enumerate(v):
            out[k] += c * a
    return tuple(out)


def transpose(m: Sequence[Sequence[Fraction]], ncols: int | None = None) -> RationalMat:
    if not m:
        return tuple(() for _ in range(ncols or 0))
    return tuple(tuple(r[j] for r in m) for j in range(len(m[0])))


def matvec(m: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> RationalVec:
    return tuple(dot(r, v) for r in m)


def _ncols(m: Sequence[Sequence[Fraction]], ncols: int | None) -> int:
    if m:
        n = len(m[0])
        if any(len(r) != n for r in m):
            raise DimensionError("ragged matrix")
        if ncols is not None and ncols != n:
            raise DimensionError(f"matrix has {n} columns, caller said {ncols}")
        return n
    if ncols is None:
        raise DimensionError("column count of an empty matrix is ambiguous; pass ncols")
    return ncols


def rref(m: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns.

    The pivot in each column is the first row (lowest index) below the current
    echelon position with a nonzero entry, so results do not depend on the
    magnitudes of the entries.
    """
    n = _ncols(m, ncols)
    rows = [[to_rational(x) for x in r] for r in m]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(m: Sequence[Sequence], ncols: int | None = None) -> int:
    if not m:
        return 0
    return len(rref(m, ncols)[1])


def kernel_basis(m: Sequence[Sequence], ncols: int | None = None) -> list[RationalVec]:
    """Basis of the right null space ``{x : m x = 0}``.

    One vector per free column, with that free variable set to 1.
    """
    n = _ncols(m, ncols)
    red, pivots = rref(m, n) if m else ([], [])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            x[pc] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(m: Sequence[Sequence], b: Sequence, ncols: int | None = None) -> tuple[RationalVec | None, list[RationalVec]]:
    """Solve ``m x = b``.

    Returns ``(x0, kernel)`` where ``x0`` is the particular solution with all
    free variables zero, or ``(None, kernel)`` when the system is inconsistent.
    """
    n = _ncols(m, ncols)
    if len(b) != len(m):
        raise DimensionError(f"{len(m)} equations but {len(b)} right-hand sides")
    aug = [list(r) + [to_rational(bi)] for r, bi in zip(m, b)]
    kern = kernel_basis(m, n)
    if not aug:
        return zero(n), kern
    red, pivots = rref(aug, n + 1)
    if n in pivots:
        return None, kern
    x = [Fraction(0)] * n
    for row, pc in zip(red, pivots):
        x[pc] = row[n]
    return tuple(x), kern


def primitive_integer_generator(v: Sequence) -> IntVec:
    """Integer vector proportional to ``v`` with content 1, first nonzero entry positive."""
    q = vec(v)
    if all(x == 0 for x in q):
        raise ValueError("zero vector has no primitive generator")
    den = reduce(lcm, (x.denominator for x in q), 1)
    ints = [int(x * den) for x in q]
    g = reduce(gcd, (abs(a) for a in ints), 0)
    ints = [a // g for a in ints]
    lead = next(a for a in ints if a != 0)
    if lead < 0:
        ints = [-a for a in ints]
    return tuple(ints)


def is_independent(vs: Sequence[Sequence]) -> bool:
    if not vs:
        return True
    if len({len(v) for v in vs}) != 1:
        raise DimensionError("vectors of different dimensions")
    return rank(vs) == len(vs)
