"""Exact piecewise-linear geometry in dimension at most two.

Sets are finite disjoint unions of relatively open simplices (points, open
segments, open triangles).  Cover and disjointness questions are answered by
sampling one point from every face of a hyperplane arrangement that contains
all cell boundaries; on each such face every cell is either present or absent,
so the finite sample decides the question exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from typing import Iterable, Sequence

from . import exactlin as el
from .exactlin import RationalVec

MAX_DIM = 2


class UnsupportedDimension(ValueError):
    """PL data beyond the dimensions the exact tests handle."""


def affine_rank(points: Sequence[RationalVec]) -> int:
    if not points:
        return -1
    return el.rank([el.sub(p, points[0]) for p in points[1:]], len(points[0])) if len(points) > 1 else 0


def barycentric(vertices: Sequence[RationalVec], x: RationalVec) -> RationalVec | None:
    """Coordinates ``lam`` with ``sum lam_i v_i = x``, ``sum lam_i = 1``; None off the affine hull."""
    d = len(x)
    A = [[v[k] for v in vertices] for k in range(d)] + [[Fraction(1)] * len(vertices)]
    lam, kern = el.solve(A, list(x) + [Fraction(1)], len(vertices))
    if kern:
        raise ValueError("simplex vertices are affinely dependent")
    return lam


@dataclass(frozen=True)
class Simplex:
    """Relative interior of the convex hull of affinely independent vertices."""

    vertices: tuple[RationalVec, ...]

    def __post_init__(self):
        vs = tuple(el.vec(v) for v in self.vertices)
        object.__setattr__(self, "vertices", vs)
        if not vs:
            raise ValueError("empty simplex")
        if len({len(v) for v in vs}) != 1:
            raise el.DimensionError("simplex vertices of mixed dimension")
        if affine_rank(vs) != len(vs) - 1:
            raise ValueError(f"degenerate simplex {vs}")
        if len(vs[0]) > MAX_DIM:
            raise UnsupportedDimension(f"cells in dimension {len(vs[0])}; only dimensions up to {MAX_DIM} are supported")

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0])

    def contains(self, x: RationalVec) -> bool:
        lam = barycentric(self.vertices, x)
        return lam is not None and all(v > 0 for v in lam)

    def faces(self) -> list["Simplex"]:
        """All relatively open faces, the simplex itself included."""
        n = len(self.vertices)
        return [Simplex(tuple(self.vertices[i] for i in I)) for k in range(1, n + 1) for I in combinations(range(n), k)]

    def key(self):
        return tuple(sorted(self.vertices))


def cell_pieces(vertices: Sequence, closed_faces: Iterable[Sequence[int]] | str = ()) -> list[Simplex]:
    """Split a simplex with selected boundary faces into relatively open pieces.

    ``closed_faces`` is ``"closed"`` (every face), ``"open"`` or a list of
    vertex-index lists naming the proper faces that belong to the set.
    """
    vs = tuple(el.vec(v) for v in vertices)
    n = len(vs)
    if closed_faces == "closed":
        faces = [I for k in range(1, n) for I in combinations(range(n), k)]
    elif closed_faces == "open":
        faces = []
    else:
        faces = sorted({tuple(sorted(f)) for f in closed_faces})
        for f in faces:
            if not f or len(f) >= n or any(not 0 <= i < n for i in f):
                raise ValueError(f"bad face {list(f)} of a simplex with {n} vertices")
    return [Simplex(vs)] + [Simplex(tuple(vs[i] for i in f)) for f in faces]


@dataclass(frozen=True)
class PLSet:
    cells: tuple[Simplex, ...]

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(self.cells))
        if len({c.ambient_dim for c in self.cells}) > 1:
            raise el.DimensionError("PL set cells in different ambient dimensions")

    @property
    def ambient_dim(self) -> int | None:
        return self.cells[0].ambient_dim if self.cells else None

    @property
    def vertices(self) -> list[RationalVec]:
        return sorted({v for c in self.cells for v in c.vertices})

    def contains(self, x: RationalVec) -> bool:
        return any(c.contains(x) for c in self.cells)

    def multiplicity(self, x: RationalVec) -> int:
        return sum(c.contains(x) for c in self.cells)


class ConvexPolytope:
    """Convex hull of ``vertices`` with some boundary faces removed.

    A simplex (any dimension up to two) or, in the plane, a convex polygon with
    vertices in cyclic order.  Faces are named by sorted vertex-index tuples;
    the relative interior always belongs to the set.
    """

    def __init__(self, vertices: Sequence, open_faces: Iterable[Sequence[int]] = ()):
        self.vertices: tuple[RationalVec, ...] = tuple(el.vec(v) for v in vertices)
        if not self.vertices:
            raise ValueError("polytope needs at least one vertex")
        self.dim_ambient = len(self.vertices[0])
        if any(len(v) != self.dim_ambient for v in self.vertices):
            raise el.DimensionError("polytope vertices of mixed dimension")
        if self.dim_ambient > MAX_DIM:
            raise UnsupportedDimension(f"polytope in dimension {self.dim_ambient}")
        self.dim = affine_rank(self.vertices)
        n = len(self.vertices)
        if n == self.dim + 1:
            self.kind = "simplex"
            self._faces = [I for k in range(1, n) for I in combinations(range(n), k)]
        elif self.dim == 2:
            self.kind = "polygon"
            self._orient = self._check_polygon()
            self._faces = [(i,) for i in range(n)] + [tuple(sorted((i, (i + 1) % n))) for i in range(n)]
        else:
            raise ValueError("vertices must be the extreme points of a simplex or a convex polygon")
        self.open_faces = frozenset(tuple(sorted(f)) for f in open_faces)
        unknown = self.open_faces - set(self._faces)
        if unknown:
            raise ValueError(f"not faces of this polytope: {sorted(unknown)}")

    def _check_polygon(self) -> int:
        vs, n = self.vertices, len(self.vertices)
        turns = [_cross(vs[i], vs[(i + 1) % n], vs[(i + 2) % n]) for i in range(n)]
        if any(t == 0 for t in turns) or len({t > 0 for t in turns}) != 1:
            raise ValueError("polygon vertices are not in strictly convex cyclic order")
        orient = 1 if turns[0] > 0 else -1
        # consistent turns also allow star polygons; a convex one turns exactly once
        order = vs if orient == 1 else vs[::-1]
        edges = [el.sub(order[(i + 1) % n], order[i]) for i in range(n)]
        wraps = sum(_angle_cmp(edges[(i + 1) % n], edges[i]) < 0 for i in range(n))
        if wraps != 1:
            raise ValueError("polygon winds more than once")
        return orient

    def faces(self) -> list[tuple[int, ...]]:
        return list(self._faces)

    def face_of(self, x: RationalVec) -> tuple[int, ...] | None:
        """Smallest face whose relative interior holds ``x``; ``()`` for the interior, None outside."""
        x = el.vec(x)
        n = len(self.vertices)
        if self.kind == "simplex":
            lam = barycentric(self.vertices, x)
            if lam is None or any(v < 0 for v in lam):
                return None
            support = tuple(i for i in range(n) if lam[i] > 0)
            return () if len(support) == n else support
        vs = self.vertices
        on = []
        for i in range(n):
            s = self._orient * _cross(vs[i], vs[(i + 1) % n], x)
            if s < 0:
                return None
            if s == 0:
                on.append(i)
        if not on:
            return ()
        if len(on) == 1:
            i = on[0]
            return tuple(sorted((i, (i + 1) % n)))
        # on two consecutive edges: the shared vertex
        a, b = on
        return ((b,) if (a + 1) % n == b else (a,))

    def contains(self, x: RationalVec) -> bool:
        f = self.face_of(x)
        return f is not None and f not in self.open_faces

    def convexity_violations(self) -> list[str]:
        """An excluded face whose own vertices are all included breaks convexity."""
        out = []
        for f in self.open_faces:
            if len(f) >= 2 and all((i,) not in self.open_faces for i in f):
                out.append(f"face {list(f)} is excluded but all of its vertices are included")
        return out

    def basepoint(self) -> RationalVec:
        """Vertex average: a rational point in the relative interior."""
        n = len(self.vertices)
        return tuple(sum((v[k] for v in self.vertices), Fraction(0)) / n for k in range(self.dim_ambient))

    def boundary_cells(self) -> list[Simplex]:
        return [Simplex(tuple(self.vertices[i] for i in f)) for f in self._faces]


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])



# Hyperplane arrangements -------------------------------------------------

Hyperplane = tuple[RationalVec, Fraction]  # a . x = b


def _normalize(a: RationalVec, b: Fraction) -> Hyperplane:
    lead = next(c for c in a if c != 0)
    return tuple(c / lead for c in a), b / lead


def hyperplanes_for(simplices: Iterable[Simplex], d: int) -> set[Hyperplane]:
    """Axis hyperplanes through every vertex plus, in the plane, lines through every edge."""
    out: set[Hyperplane] = set()
    for s in simplices:
        for v in s.vertices:
            for k in range(d):
                out.add((el.unit(d, k), v[k]))
        if d == 2:
            for p, q in combinations(s.vertices, 2):
                a = (q[1] - p[1], p[0] - q[0])
                out.add(_normalize(a, el.dot(a, p)))
    return out


def _spread(values: Iterable[Fraction]) -> list[Fraction]:
    """Given cut values, return them plus one point in every gap and beyond each end."""
    vs = sorted(set(values))
    if not vs:
        return [Fraction(0)]
    out = [vs[0] - 1]
    for a, b in zip(vs, vs[1:]):
        out += [a, (a + b) / 2]
    out += [vs[-1], vs[-1] + 1]
    return out


def arrangement_samples(planes: Iterable[Hyperplane], d: int) -> list[RationalVec]:
    """One or more points in every face of the arrangement (d = 1 or 2)."""
    planes = set(planes)
    if d == 1:
        return [(x,) for x in _spread(b / a[0] for a, b in planes)]
    if d != 2:
        raise UnsupportedDimension(f"arrangements in dimension {d}")
    vertical = {b / a[0] for a, b in planes if a[1] == 0}
    slanted = [(a, b) for a, b in planes if a[1] != 0]
    crit = set(vertical)
    for (a, b), (c, e) in combinations(slanted, 2):
        det = a[0] * c[1] - a[1] * c[0]
        if det != 0:
            crit.add((b * c[1] - a[1] * e) / det)
    xs = _spread(crit)
    pts = []
    for x in xs:
        ys = [(b - a[0] * x) / a[1] for a, b in slanted]
        pts += [(x, y) for y in _spread(ys)]
    return sorted(set(pts))


def _angle_key(u):
    x, y = u
    upper = y > 0 or (y == 0 and x > 0)
    return 0 if upper else 1


def _angle_cmp(u, v) -> int:
    """Compare directions by angle in [0, 2 pi)."""
    hu, hv = _angle_key(u), _angle_key(v)
    if hu != hv:
        return hu - hv
    c = u[0] * v[1] - u[1] * v[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def _angle_sorted(dirs: list[RationalVec]) -> list[RationalVec]:
    return sorted(dirs, key=cmp_to_key(_angle_cmp))


def local_samples(v: RationalVec, planes: Iterable[Hyperplane]) -> list[RationalVec]:
    """Points in every arrangement face whose closure holds ``v``, excluding ``v`` itself.

    The points are ``v + eps * u`` for ray and sector directions ``u`` with
    ``eps`` small enough that no hyperplane avoiding ``v`` is crossed.
    """
    v = el.vec(v)
    d = len(v)
    planes = set(planes)
    through = [(a, b) for a, b in planes if el.dot(a, v) == b]
    if d == 1:
        dirs = [(Fraction(1),), (Fraction(-1),)]
    elif d == 2:
        rays = set()
        for a, _ in through:
            u = (a[1], -a[0])
            rays.add(u)
            rays.add((-u[0], -u[1]))
        if not rays:
            rays = {(Fraction(1), Fraction(0)), (Fraction(-1), Fraction(0))}
        ordered = _angle_sorted(list(_dedupe_dirs(rays)))
        dirs = list(ordered)
        for i, u in enumerate(ordered):
            w = ordered[(i + 1) % len(ordered)]
            cr = u[0] * w[1] - u[1] * w[0]
            if cr > 0:
                dirs.append(el.add(u, w))
            else:
                # consecutive rays are opposite: step a quarter turn counterclockwise from u
                dirs.append((-u[1], u[0]))
    else:
        raise UnsupportedDimension(f"local samples in dimension {d}")
    eps = Fraction(1)
    for a, b in planes:
        gap = abs(el.dot(a, v) - b)
        if gap == 0:
            continue
        for u in dirs:
            s = abs(el.dot(a, u))
            if s:
                eps = min(eps, gap / (2 * s))
    return [el.add(v, el.scale(eps, u)) for u in dirs]


def _dedupe_dirs(dirs):
    seen = {}
    for u in dirs:
        m = max(abs(c) for c in u)
        seen.setdefault(tuple(c / m for c in u), u)
    return seen.values()


# Segment predicates for skeleta -----------------------------------------

def open_segments_meet(a, b, c, d) -> bool:
    """Do the open segments ``(a, b)`` and ``(c, d)`` intersect?  Both must be nondegenerate."""
    a, b, c, d = map(el.vec, (a, b, c, d))
    u, w = el.sub(b, a), el.sub(d, c)
    if not any(u) or not any(w):
        raise ValueError("degenerate segment")
    n = len(a)
    A = [[u[k], -w[k]] for k in range(n)]
    x0, kern = el.solve(A, el.sub(c, a), 2)
    if x0 is None:
        return False
    if not kern:
        return all(0 < t < 1 for t in x0)
    # collinear: solutions x0 + tau * k; intersect with the open unit square
    (k,) = kern
    lo, hi = None, None
    for base, slope in zip(x0, k):
        if slope == 0:
            if not 0 < base < 1:
                return False
            continue
        t0, t1 = sorted(((0 - base) / slope, (1 - base) / slope))
        lo = t0 if lo is None else max(lo, t0)
        hi = t1 if hi is None else min(hi, t1)
    return lo < hi


def point_in_open_segment(p, a, b) -> bool:
    return Simplex((el.vec(a), el.vec(b))).contains(el.vec(p))
