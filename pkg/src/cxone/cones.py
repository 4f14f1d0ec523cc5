"""Anchored polyhedral cones ``apex + span(subspace) + sum R>=0 rays``.

Membership and strict separation go through `fourier_motzkin.feasible`, so
every answer comes with a certificate that has been checked exactly.  The
cell decomposition over linearly independent subsets of rays is the tool the
rest of the package uses to turn moment data into orbit data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

from . import exactlin as el
from .exactlin import DimensionError, RationalMat, RationalVec
from .fourier_motzkin import Feasible, feasible

IndexSet = tuple[int, ...]


@dataclass(frozen=True)
class Cone:
    """``apex + span(subspace_basis) + sum_i R>=0 rays[i]``.

    Rays listed in ``open_rays`` carry strictly positive coefficients, which
    is how relatively open cells ``C_I`` are represented.
    """

    ambient_dim: int
    apex: RationalVec
    subspace_basis: tuple[RationalVec, ...] = ()
    rays: tuple[RationalVec, ...] = ()
    open_rays: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "apex", el.vec(self.apex))
        object.__setattr__(self, "subspace_basis", tuple(el.vec(v) for v in self.subspace_basis))
        object.__setattr__(self, "rays", tuple(el.vec(v) for v in self.rays))
        object.__setattr__(self, "open_rays", frozenset(self.open_rays))
        for v in (self.apex, *self.subspace_basis, *self.rays):
            if len(v) != self.ambient_dim:
                raise DimensionError(f"vector {v} not of length {self.ambient_dim}")
        if not el.is_independent(self.subspace_basis):
            raise ValueError("subspace basis is linearly dependent")
        bad = [i for i in self.open_rays if not 0 <= i < len(self.rays)]
        if bad:
            raise ValueError(f"open ray indices out of range: {bad}")
        if any(all(x == 0 for x in self.rays[i]) for i in self.open_rays):
            raise ValueError("a relatively open ray block needs nonzero rays")

    def closure(self) -> "Cone":
        return Cone(self.ambient_dim, self.apex, self.subspace_basis, self.rays)


@dataclass(frozen=True)
class Membership:
    contained: bool
    subspace_coeffs: RationalVec = ()
    ray_coeffs: RationalVec = ()

    def __bool__(self) -> bool:
        return self.contained


def cone_contains(c: Cone, alpha: Sequence) -> Membership:
    """Decide ``alpha in c`` for the closed cone (open ray flags are ignored).

    >>> bool(cone_contains(Cone(1, (2,), rays=((-1,), (-1,))), ("5/2",)))
    False
    """
    alpha = el.vec(alpha)
    if len(alpha) != c.ambient_dim:
        raise DimensionError(f"point of length {len(alpha)} for cone in dimension {c.ambient_dim}")
    s, r = len(c.subspace_basis), len(c.rays)
    n = s + r
    gens = list(c.subspace_basis) + list(c.rays)
    A_eq = [[g[k] for g in gens] for k in range(c.ambient_dim)]
    b_eq = el.sub(alpha, c.apex)
    A_ub = [[Fraction(-int(j == s + i)) for j in range(n)] for i in range(r)]
    res = feasible(A_ub, [0] * r, A_eq, b_eq, n=n)
    if isinstance(res, Feasible):
        return Membership(True, res.point[:s], res.point[s:])
    return Membership(False)


def _positive_primitive(v: Sequence[Fraction]) -> RationalVec:
    """Rescale by a positive factor to a primitive integer vector."""
    if all(x == 0 for x in v):
        return tuple(Fraction(0) for _ in v)
    den = reduce(lcm, (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, (abs(a) for a in ints), 0)
    return tuple(Fraction(a // g) for a in ints)


@dataclass(frozen=True)
class Separator:
    """``nu`` pairing strictly positively with every weight it was built for."""

    nu: RationalVec
    weights: tuple[RationalVec, ...] = field(default=(), repr=False)

    def __post_init__(self):
        for w in self.weights:
            if el.dot(w, self.nu) <= 0:
                raise ValueError(f"<{w}, {self.nu}> is not positive")

    def pairings(self) -> RationalVec:
        return tuple(el.dot(w, self.nu) for w in self.weights)


@dataclass(frozen=True)
class Blocker:
    """Nonnegative, nonzero ``x`` with ``sum x_i w_i = 0``."""

    x: RationalVec
    weights: tuple[RationalVec, ...] = field(default=(), repr=False)

    def __post_init__(self):
        if any(v < 0 for v in self.x) or all(v == 0 for v in self.x):
            raise ValueError(f"blocker coefficients {self.x} are not a nonzero nonnegative vector")
        dim = len(self.weights[0]) if self.weights else 0
        if any(v != 0 for v in el.lincomb(self.x, self.weights, dim)):
            raise ValueError("blocker does not give a vanishing combination")


def strict_separator(weights: Sequence[Sequence], dim: int | None = None) -> Separator | Blocker:
    """Gordan alternative: a ``nu`` with ``<w, nu> > 0`` for all ``w``, or a blocker.

    Strictness is handled by asking for ``<w, nu> >= 1``; cones are scale
    invariant so nothing is lost.

    >>> strict_separator([(-1,), (-2,)]).nu
    (Fraction(-1, 1),)
    >>> strict_separator([(1,), (-1,)]).x
    (Fraction(1, 1), Fraction(1, 1))
    """
    ws = tuple(el.vec(w) for w in weights)
    if ws:
        dims = {len(w) for w in ws}
        if len(dims) != 1 or (dim is not None and dims != {dim}):
            raise DimensionError("weights of differing dimensions")
        dim = dims.pop()
    elif dim is None:
        dim = 0
    if not ws:
        return Separator(el.zero(dim), ())
    A_ub = [[-x for x in w] for w in ws]
    res = feasible(A_ub, [-1] * len(ws), n=dim)
    if isinstance(res, Feasible):
        return Separator(_positive_primitive(res.point), ws)
    return Blocker(_positive_primitive(res.y), ws)


@dataclass(frozen=True)
class Cell:
    index_set: IndexSet
    cone: Cone

    @cached_property
    def generators(self) -> tuple[RationalVec, ...]:
        return tuple(self.cone.subspace_basis) + tuple(self.cone.rays)

    @cached_property
    def left_inverse(self) -> RationalMat:
        """``L`` with ``L G = 1`` for the independent generator columns ``G``."""
        gens = self.generators
        k = len(gens)
        gram = [[el.dot(a, b) for b in gens] for a in gens]
        inv_cols = []
        for j in range(k):
            x, kern = el.solve(gram, el.unit(k, j), k)
            assert x is not None and not kern, "cell generators must be independent"
            inv_cols.append(x)
        return tuple(el.lincomb([inv_cols[j][i] for j in range(k)], gens, self.cone.ambient_dim) for i in range(k))


def independent_subsets(weights: Sequence[Sequence], modulo: Sequence[Sequence] = ()) -> list[IndexSet]:
    """Index sets ``I`` with ``{w_i : i in I}`` independent modulo ``span(modulo)``.

    Ordered lexicographically as sorted tuples, so ``()`` comes first.
    """
    ws = [el.vec(w) for w in weights]
    base = [el.vec(v) for v in modulo]
    out = []
    for k in range(len(ws) + 1):
        for I in combinations(range(len(ws)), k):
            if el.is_independent(base + [ws[i] for i in I]):
                out.append(I)
    return sorted(out)


def caratheodory_cells(apex: Sequence, subspace_basis: Sequence[Sequence], weights: Sequence[Sequence]) -> list[Cell]:
    """Disjoint relatively open cells ``C_I = apex + subspace + sum_{i in I} R>0 w_i``."""
    apex = el.vec(apex)
    sub = tuple(el.vec(v) for v in subspace_basis)
    ws = tuple(el.vec(w) for w in weights)
    cells = []
    for I in independent_subsets(ws, sub):
        rays = tuple(ws[i] for i in I)
        cells.append(Cell(I, Cone(len(apex), apex, sub, rays, frozenset(range(len(I))))))
    return cells


@dataclass(frozen=True)
class Location:
    index_set: IndexSet
    subspace_coeffs: RationalVec
    ray_coeffs: RationalVec


class AmbiguousLocation(ValueError):
    """A point lies in more than one cell; the cells were not disjoint."""

    def __init__(self, matches: list[Location]):
        self.matches = matches
        super().__init__("point lies in cells " + ", ".join(str(set(m.index_set) or "{}") for m in matches))


def _in_open_cell(cell: Cell, alpha: RationalVec) -> Location | None:
    c = cell.cone
    r = el.sub(alpha, c.apex)
    x = tuple(el.dot(row, r) for row in cell.left_inverse)
    if el.lincomb(x, cell.generators, c.ambient_dim) != r:
        return None
    s = len(c.subspace_basis)
    lam = x[s:]
    if all(v > 0 for v in lam):
        return Location(cell.index_set, x[:s], lam)
    return None


def locate(cells: Sequence[Cell], alpha: Sequence) -> Location | None:
    """The unique cell containing ``alpha``, or None when no cell does.

    Raises `AmbiguousLocation` listing every match when cells overlap, which
    happens for the weight data of short points.
    """
    alpha = el.vec(alpha)
    matches = [m for cell in cells if (m := _in_open_cell(cell, alpha)) is not None]
    if len(matches) > 1:
        raise AmbiguousLocation(matches)
    return matches[0] if matches else None
