"""Skeleton injectivity and the locally-constant painting certificate.

The certificate follows the route of the triviality argument: if every
connected piece ``A_i`` of the tall core closure maps bijectively onto the
convex set ``Delta_tall``, each piece has a section ``s_i``; retracting
``Delta_tall`` to a basepoint along straight lines then deforms any painting
into one that is constant on each skeleton component, with value fixed by
``s_i(basepoint)``.  The surface itself never enters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import networkx as nx

from . import exactlin as el
from .exactlin import RationalVec
from .orbits import OrbitComplex, tall_core_components
from .plgeom import (
    Simplex,
    arrangement_samples,
    hyperplanes_for,
    local_samples,
    open_segments_meet,
    point_in_open_segment,
)

SAMPLE_TIMES = (Fraction(0), Fraction(1, 2), Fraction(1))


class MalformedSkeleton(ValueError):
    pass


class SkeletonDataError(ValueError):
    """Skeleton data inconsistent with the orbit complex."""


@dataclass(frozen=True)
class SkeletonVertex:
    id: str
    image: RationalVec
    excluded: bool = False  # endpoint of an open edge, not itself in the skeleton

    def __post_init__(self):
        object.__setattr__(self, "image", el.vec(self.image))


@dataclass(frozen=True)
class SkeletonComponent:
    """A connected 1-complex with an affine moment map on each edge."""

    id: str
    vertices: tuple[SkeletonVertex, ...]
    edges: tuple[tuple[str, str], ...] = ()
    orbits: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        object.__setattr__(self, "orbits", tuple(self.orbits))
        names = [v.id for v in self.vertices]
        if not names:
            raise MalformedSkeleton(f"component {self.id} has no vertices")
        if len(set(names)) != len(names):
            raise MalformedSkeleton(f"component {self.id} repeats a vertex id")
        if len({len(v.image) for v in self.vertices}) != 1:
            raise MalformedSkeleton(f"component {self.id} mixes image dimensions")
        g = nx.MultiGraph()
        g.add_nodes_from(names)
        for a, b in self.edges:
            if a not in names or b not in names:
                raise MalformedSkeleton(f"component {self.id}: edge {a}-{b} names an unknown vertex")
            if a == b:
                raise MalformedSkeleton(f"component {self.id}: loop edge at {a}")
            g.add_edge(a, b)
        if not nx.is_connected(g):
            raise MalformedSkeleton(f"component {self.id} is not connected")
        present = [v for v in self.vertices if not v.excluded]
        if not present and not self.edges:
            raise MalformedSkeleton(f"component {self.id} is empty")

    def vertex(self, vid: str) -> SkeletonVertex:
        return next(v for v in self.vertices if v.id == vid)

    def points(self) -> list[tuple[str, RationalVec]]:
        return [(v.id, v.image) for v in self.vertices if not v.excluded]

    def segments(self) -> list[tuple[str, RationalVec, RationalVec]]:
        return [(f"{a}-{b}", self.vertex(a).image, self.vertex(b).image) for a, b in self.edges]

    def subdivided(self) -> "SkeletonComponent":
        """Barycentric subdivision: every edge split at its midpoint."""
        verts = list(self.vertices)
        edges = []
        for a, b in self.edges:
            mid = f"{a}~{b}"
            img = tuple((x + y) / 2 for x, y in zip(self.vertex(a).image, self.vertex(b).image))
            verts.append(SkeletonVertex(mid, img))
            edges += [(a, mid), (mid, b)]
        return SkeletonComponent(self.id, tuple(verts), tuple(edges), self.orbits)


@dataclass(frozen=True)
class InjectivityVerdict:
    component: str
    injective: bool
    witness: str | None = None


def _collision(points, segments) -> str | None:
    for (a, pa), (b, pb) in combinations(points, 2):
        if pa == pb:
            return f"vertices {a} and {b} share the image {_fmt(pa)}"
    for name, p, q in segments:
        if p == q:
            return f"edge {name} collapses to the point {_fmt(p)}"
    for vid, pv in points:
        for name, p, q in segments:
            if point_in_open_segment(pv, p, q):
                return f"vertex {vid} maps into the image of edge {name}"
    for (n1, p1, q1), (n2, p2, q2) in combinations(segments, 2):
        if open_segments_meet(p1, q1, p2, q2):
            return f"edges {n1} and {n2} have overlapping images"
    return None


def component_injectivity(components: Sequence[SkeletonComponent]) -> list[InjectivityVerdict]:
    """Is the orbital moment map injective on each skeleton component?"""
    out = []
    for c in components:
        w = _collision(c.points(), c.segments())
        out.append(InjectivityVerdict(c.id, w is None, w))
    return out


def _images_meet(c1: SkeletonComponent, c2: SkeletonComponent) -> bool:
    pts1, pts2 = c1.points(), c2.points()
    seg1, seg2 = c1.segments(), c2.segments()
    if any(p == q for _, p in pts1 for _, q in pts2):
        return True
    if any(point_in_open_segment(p, a, b) for _, p in pts1 for _, a, b in seg2):
        return True
    if any(point_in_open_segment(p, a, b) for _, p in pts2 for _, a, b in seg1):
        return True
    return any(open_segments_meet(a, b, c, d) for _, a, b in seg1 for _, c, d in seg2)


@dataclass(frozen=True)
class HomeoVerdict:
    ok: bool
    sections: dict[str, list[Simplex]] = field(default_factory=dict)
    witness: str | None = None
    witness_point: RationalVec | None = None


def _component_cells(oc: OrbitComplex, component: Sequence[str]) -> list[tuple[str, Simplex]]:
    return [(oid, c) for oid in component for c in oc.record(oid).moment_image.cells]


def _planes(oc: OrbitComplex, cells):
    d = oc.delta_tall.dim_ambient
    return hyperplanes_for([c for _, c in cells] + oc.delta_tall.boundary_cells(), d)


def component_homeo_onto_delta(oc: OrbitComplex, component: Sequence[str]) -> HomeoVerdict:
    """Do the member images tile ``Delta_tall`` exactly once?"""
    delta = oc.delta_tall
    d = delta.dim_ambient
    cells = _component_cells(oc, component)
    for oid, c in cells:
        if c.ambient_dim != d:
            raise el.DimensionError(f"image of {oid} is not in dimension {d}")
    for x in arrangement_samples(_planes(oc, cells), d):
        hits = [oid for oid, c in cells if c.contains(x)]
        inside = delta.contains(x)
        if len(hits) > 1:
            return HomeoVerdict(False, witness=f"{_fmt(x)} is covered by {', '.join(hits)}", witness_point=x)
        if inside and not hits:
            return HomeoVerdict(False, witness=f"{_fmt(x)} in delta_tall is not covered", witness_point=x)
        if hits and not inside:
            return HomeoVerdict(False, witness=f"{_fmt(x)} is covered by {hits[0]} but lies outside delta_tall",
                                witness_point=x)
    sections: dict[str, list[Simplex]] = {}
    for oid, c in cells:
        sections.setdefault(oid, []).append(c)
    return HomeoVerdict(True, sections)


@dataclass(frozen=True)
class LocalFailure:
    component: int
    vertex: RationalVec
    reason: str


@dataclass(frozen=True)
class LocalHomeoVerdict:
    ok: bool
    failures: tuple[LocalFailure, ...] = ()


def local_homeo_check(oc: OrbitComplex) -> LocalHomeoVerdict:
    """Near every vertex of every tall core image, the star injects onto a neighbourhood of ``Delta_tall``.

    Vertices that are not themselves covered (excluded endpoints) only need
    injectivity and containment on the punctured neighbourhood.
    """
    delta = oc.delta_tall
    fails = []
    for k, comp in enumerate(tall_core_components(oc)):
        cells = _component_cells(oc, comp)
        planes = _planes(oc, cells)
        verts = sorted({v for _, c in cells for v in c.vertices})
        for v in verts:
            covered = sum(c.contains(v) for _, c in cells)
            reason = None
            if covered > 1:
                reason = "vertex is covered more than once"
            elif covered and not delta.contains(v):
                reason = "vertex maps outside delta_tall"
            else:
                for s in local_samples(v, planes):
                    n = sum(c.contains(s) for _, c in cells)
                    inside = delta.contains(s)
                    if n > 1:
                        reason = f"star overlaps itself near {_fmt(s)}"
                    elif n and not inside:
                        reason = f"star leaves delta_tall near {_fmt(s)}"
                    elif covered and inside and not n:
                        reason = f"image is not a neighbourhood: {_fmt(s)} is missed"
                    if reason:
                        break
            if reason:
                fails.append(LocalFailure(k, v, reason))
    return LocalHomeoVerdict(not fails, tuple(fails))


@dataclass(frozen=True)
class CertificateEntry:
    skeleton_component: str
    section: int  # index into tall_core_components
    section_orbits: tuple[str, ...]
    label: str  # the orbit s_i(basepoint)


@dataclass(frozen=True)
class TrivialityCertificate:
    basepoint: RationalVec
    entries: tuple[CertificateEntry, ...]
    sample_times: tuple[Fraction, ...]
    checks: tuple[str, ...]


@dataclass(frozen=True)
class Refusal:
    status: str  # "not-trivial" or "inconclusive"
    component: str
    reason: str

    def __bool__(self) -> bool:
        return False


def _containing_section(comps: list[list[str]], comp: SkeletonComponent) -> int:
    if not comp.orbits:
        raise SkeletonDataError(f"skeleton component {comp.id} lists no orbits")
    for i, a in enumerate(comps):
        if set(comp.orbits) <= set(a):
            return i
    raise SkeletonDataError(f"skeleton component {comp.id} is not inside any tall core component")


def triviality_certificate(oc: OrbitComplex, skeleton: Sequence[SkeletonComponent]) -> TrivialityCertificate | Refusal:
    comps = tall_core_components(oc)
    owner = {c.id: _containing_section(comps, c) for c in skeleton}

    for v in component_injectivity(skeleton):
        if not v.injective:
            return Refusal("not-trivial", v.component,
                           f"orbital moment map is not injective on {v.component} ({v.witness}); "
                           "no painting of this space is trivial")

    delta = oc.delta_tall
    sections = []
    for i, a in enumerate(comps):
        hv = component_homeo_onto_delta(oc, a)
        if not hv.ok:
            return Refusal("inconclusive", f"A{i}",
                           f"tall core component A{i} = {{{', '.join(a)}}} is not a homeomorphism onto delta_tall: {hv.witness}")
        sections.append(hv)

    beta = delta.basepoint()
    labels = []
    for i, a in enumerate(comps):
        hit = [oid for oid in a if oc.record(oid).moment_image.contains(beta)]
        assert len(hit) == 1
        labels.append(hit[0])

    checks = []
    samples = [x for x in arrangement_samples(_planes(oc, [(o, c) for a in comps for o, c in _component_cells(oc, a)]),
                                              delta.dim_ambient) if delta.contains(x)]
    for t in SAMPLE_TIMES:
        moved = [el.add(el.scale(1 - t, x), el.scale(t, beta)) for x in samples]
        if not all(delta.contains(y) for y in moved):
            raise AssertionError(f"straight-line retraction left delta_tall at t={t}")
        checks.append(f"t={el.fmt_rational(t)}: retraction keeps {len(samples)} sample points of delta_tall inside it")
    checks.append(f"{len(comps)} tall core components are disjoint and each maps bijectively onto delta_tall")
    for c1, c2 in combinations(skeleton, 2):
        if owner[c1.id] == owner[c2.id]:
            if _images_meet(c1, c2):
                raise SkeletonDataError(f"{c1.id} and {c2.id} share section A{owner[c1.id]} but their images meet")
            checks.append(f"{c1.id} and {c2.id} share section A{owner[c1.id]} and have disjoint images")
        elif _images_meet(c1, c2):
            checks.append(f"{c1.id} and {c2.id} have overlapping images but distinct sections "
                          f"A{owner[c1.id]} and A{owner[c2.id]}")

    entries = tuple(
        CertificateEntry(c.id, owner[c.id], tuple(comps[owner[c.id]]), labels[owner[c.id]]) for c in skeleton
    )
    return TrivialityCertificate(beta, entries, SAMPLE_TIMES, tuple(checks))


def _fmt(v) -> str:
    return "(" + ", ".join(el.fmt_rational(x) for x in v) + ")"
