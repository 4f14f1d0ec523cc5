"""Exact feasibility of rational linear systems by Fourier-Motzkin elimination.

`feasible` decides ``{x : A x <= b, E x = f}`` and returns either a point of
the set or a Farkas certificate ``(y, z)`` with ``y >= 0``,
``y A + z E = 0`` and ``y.b + z.f < 0``.  Both outcomes are checked exactly
before being handed back.

The elimination is doubly exponential in the worst case; it is meant for the
handful of variables (at most six or so) that arise from isotropy data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactlin import (
    RationalVec,
    dot,
    kernel_basis,
    matvec,
    solve,
    to_rational,
    transpose,
    zero,
)


@dataclass(frozen=True)
class Feasible:
    point: RationalVec

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class Infeasible:
    y: RationalVec  # multipliers on the inequalities, all >= 0
    z: RationalVec  # multipliers on the equalities, free

    def __bool__(self) -> bool:
        return False


@dataclass
class _Row:
    coeffs: list[Fraction]
    rhs: Fraction
    mult: list[Fraction]  # nonnegative combination of the reduced inequalities

    def key(self):
        lead = next((abs(c) for c in self.coeffs if c != 0), None)
        if lead is None:
            return (tuple(self.coeffs), self.rhs)
        return (tuple(c / lead for c in self.coeffs), self.rhs / lead)


def _eliminate(rows: list[_Row], j: int) -> list[_Row]:
    pos = [r for r in rows if r.coeffs[j] > 0]
    neg = [r for r in rows if r.coeffs[j] < 0]
    out = [r for r in rows if r.coeffs[j] == 0]
    for p in pos:
        for q in neg:
            a, b = p.coeffs[j], -q.coeffs[j]
            out.append(_Row(
                [b * x + a * y for x, y in zip(p.coeffs, q.coeffs)],
                b * p.rhs + a * q.rhs,
                [b * x + a * y for x, y in zip(p.mult, q.mult)],
            ))
    seen: dict = {}
    for r in out:
        if all(c == 0 for c in r.coeffs) and r.rhs >= 0:
            continue
        seen.setdefault(r.key(), r)
    return list(seen.values())


def _fm(A: list[list[Fraction]], b: list[Fraction], n: int) -> tuple[list[Fraction] | None, list[Fraction] | None]:
    """Fourier-Motzkin on ``A t <= b``; returns ``(t, None)`` or ``(None, y)``."""
    m = len(A)
    rows = [_Row(list(A[i]), b[i], [Fraction(int(k == i)) for k in range(m)]) for i in range(m)]
    levels = [rows]
    for j in reversed(range(n)):
        rows = _eliminate(rows, j)
        levels.append(rows)
    for r in rows:
        if r.rhs < 0:
            return None, r.mult
    # levels[n - j] still mentions variables 0..j
    t = [Fraction(0)] * n
    for j in range(n):
        lo = hi = None
        for r in levels[n - 1 - j]:
            a = r.coeffs[j]
            if a == 0:
                continue
            bound = (r.rhs - sum((r.coeffs[k] * t[k] for k in range(j)), Fraction(0))) / a
            if a > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        t[j] = lo if lo is not None else hi if hi is not None else Fraction(0)
    return t, None


def feasible(
    A_ub: Sequence[Sequence],
    b_ub: Sequence,
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    *,
    n: int,
) -> Feasible | Infeasible:
    A = [[to_rational(x) for x in r] for r in A_ub]
    b = [to_rational(x) for x in b_ub]
    E = [[to_rational(x) for x in r] for r in A_eq]
    f = [to_rational(x) for x in b_eq]
    if any(len(r) != n for r in A + E) or len(A) != len(b) or len(E) != len(f):
        raise ValueError("inconsistent system dimensions")

    x0, N = solve(E, f, n)
    if x0 is None:
        for z in kernel_basis(transpose(E, n), len(E)):
            s = dot(z, f)
            if s != 0:
                z = tuple(-zi / s for zi in z)  # z.f == -1
                return _checked(Infeasible(zero(len(A)), z), A, b, E, f, n)
        raise AssertionError("inconsistent system without a left-kernel witness")

    k = len(N)
    AN = [[dot(r, [N[c][i] for i in range(n)]) for c in range(k)] for r in A]
    rhs = [bi - dot(r, x0) for r, bi in zip(A, b)]
    t, y = _fm(AN, rhs, k)
    if t is not None:
        x = tuple(x0[i] + sum((t[c] * N[c][i] for c in range(k)), Fraction(0)) for i in range(n))
        return _checked(Feasible(x), A, b, E, f, n)

    # y A is orthogonal to ker E, so it lies in the row space of E
    yA = [sum((y[i] * A[i][c] for i in range(len(A))), Fraction(0)) for c in range(n)]
    if E:
        z, _ = solve(transpose(E, n), [-v for v in yA], len(E))
        assert z is not None
    else:
        z = ()
    return _checked(Infeasible(tuple(y), tuple(z)), A, b, E, f, n)


def _checked(res, A, b, E, f, n):
    if isinstance(res, Feasible):
        x = res.point
        assert all(v <= bi for v, bi in zip(matvec(A, x), b))
        assert all(v == fi for v, fi in zip(matvec(E, x), f))
    else:
        y, z = res.y, res.z
        assert all(v >= 0 for v in y)
        comb = [
            sum((y[i] * A[i][c] for i in range(len(A))), Fraction(0))
            + sum((z[i] * E[i][c] for i in range(len(E))), Fraction(0))
            for c in range(n)
        ]
        assert all(v == 0 for v in comb)
        assert dot(y, b) + dot(z, f) < 0
    return res
