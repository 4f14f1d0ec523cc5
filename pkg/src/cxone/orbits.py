"""Orbit patterns, catchments and orbit complexes.

An `OrbitComplex` is user-supplied combinatorial data standing in for the
complexified-torus orbits of a compact Kahler complexity one space: orbit
records, the closure order between them, and the moment image ``Delta_tall``
of the tall set.  `validate` checks it against what the local theory forces,
and `core`, `core_closure` and `tall_core_components` compute the sets the
painting argument runs on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

from . import exactlin as el
from .cones import Separator, cone_contains, independent_subsets, strict_separator
from .localmodel import LocalModel, classify, is_tall, moment_cone
from .plgeom import ConvexPolytope, PLSet, arrangement_samples, hyperplanes_for

IndexSet = tuple[int, ...]


class ShortCatchment(ValueError):
    """The catchment of a short point has infinitely many orbits."""

    def __init__(self):
        super().__init__("catchment infinite for short points")


@dataclass(frozen=True, order=True)
class OrbitPattern:
    support: IndexSet

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.support)) + "}"


def catchment_orbits(m: LocalModel) -> list[OrbitPattern]:
    """Orbit patterns ``I`` (independent weight subsets) of the catchment of a tall point."""
    if not is_tall(m):
        raise ShortCatchment()
    return [OrbitPattern(I) for I in independent_subsets(m.weights)]


@dataclass(frozen=True)
class CatchmentPoset:
    patterns: tuple[OrbitPattern, ...]
    hasse: tuple[tuple[OrbitPattern, OrbitPattern], ...]

    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.patterns)
        g.add_edges_from(self.hasse)
        return g

    def to_dot(self, name: str = "catchment") -> str:
        lines = [f"digraph {name} {{"]
        lines += [f'  "{p}";' for p in self.patterns]
        lines += [f'  "{a}" -> "{b}";' for a, b in self.hasse]
        return "\n".join(lines + ["}"]) + "\n"


def catchment_poset(m: LocalModel) -> CatchmentPoset:
    """Inclusion order on the catchment patterns.

    Subsets of independent sets are independent, so covering pairs are
    exactly ``I < I + {j}``.
    """
    pats = catchment_orbits(m)
    present = {p.support for p in pats}
    edges = []
    for p in pats:
        for j in range(len(m.weights)):
            if j not in p.support:
                q = tuple(sorted(p.support + (j,)))
                if q in present:
                    edges.append((p, OrbitPattern(q)))
    return CatchmentPoset(tuple(pats), tuple(edges))


def _check_pattern(m: LocalModel, J: OrbitPattern) -> None:
    if any(not 0 <= j < len(m.weights) for j in J.support) or len(set(J.support)) != len(J.support):
        raise ValueError(f"pattern {J} out of range for {len(m.weights)} weights")


def pattern_is_single_orbit(m: LocalModel, J: OrbitPattern) -> bool:
    """Whether the stratum with support ``J`` is one orbit rather than a family of them."""
    _check_pattern(m, J)
    return el.is_independent([m.weights[j] for j in J.support])


def origin_in_orbit_closure(m: LocalModel, J: OrbitPattern) -> bool:
    _check_pattern(m, J)
    dim = len(m.weights[0])
    return isinstance(strict_separator([m.weights[j] for j in J.support], dim), Separator)


# Orbit complexes ---------------------------------------------------------

@dataclass(frozen=True)
class OrbitRecord:
    """One complexified-torus orbit, or a whole family flagged ``generic``.

    ``declared_tall`` / ``declared_exceptional`` are what the input claims;
    when a model is present the flags used downstream come from it.
    """

    id: str
    moment_image: PLSet
    model: LocalModel | None = None
    generic: bool = False
    declared_tall: bool | None = None
    declared_exceptional: bool | None = None

    @property
    def tall(self) -> bool:
        if self.model is not None:
            return is_tall(self.model)
        return True if self.declared_tall is None else self.declared_tall

    @property
    def exceptional(self) -> bool:
        if self.model is not None:
            return classify(self.model).exceptional
        return False if self.declared_exceptional is None else self.declared_exceptional


@dataclass(frozen=True)
class OrbitComplex:
    orbits: tuple[OrbitRecord, ...]
    closure: tuple[tuple[str, str], ...]  # (below, above): below lies in the closure of above
    delta_tall: ConvexPolytope
    _graph: nx.DiGraph = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "orbits", tuple(self.orbits))
        object.__setattr__(self, "closure", tuple((str(a), str(b)) for a, b in self.closure))
        g = nx.DiGraph()
        g.add_nodes_from(o.id for o in self.orbits)
        g.add_edges_from(self.closure)
        object.__setattr__(self, "_graph", g)

    @property
    def ids(self) -> list[str]:
        return [o.id for o in self.orbits]

    def record(self, oid: str) -> OrbitRecord:
        for o in self.orbits:
            if o.id == oid:
                return o
        raise KeyError(oid)

    def above(self, oid: str) -> set[str]:
        """Orbits whose closure strictly contains ``oid``."""
        return nx.descendants(self._graph, oid) - {oid}

    def below(self, oid: str) -> set[str]:
        return nx.ancestors(self._graph, oid) - {oid}

    def leq(self, a: str, b: str) -> bool:
        return a == b or b in self.above(a)

    def order_pairs(self) -> list[tuple[str, str]]:
        """The strict order generated by ``closure``."""
        return [(a, b) for a in self.ids for b in self._ordered(self.above(a))]

    def _ordered(self, ids: Iterable[str]) -> list[str]:
        s = set(ids)
        return [i for i in self.ids if i in s]

    def hasse_edges(self) -> list[tuple[str, str]]:
        tr = nx.transitive_reduction(self._graph) if nx.is_directed_acyclic_graph(self._graph) else self._graph
        return [(a, b) for a in self.ids for b in self._ordered(tr.successors(a))]

    def to_dot(self, name: str = "orbits", highlight: Iterable[str] = ()) -> str:
        hl = set(highlight)
        lines = [f"digraph {name} {{"]
        for o in self.orbits:
            attrs = [f'label="{o.id}"']
            if o.id in hl:
                attrs.append("style=bold")
            if o.exceptional:
                attrs.append("shape=box")
            lines.append(f'  "{o.id}" [{", ".join(attrs)}];')
        lines += [f'  "{a}" -> "{b}";' for a, b in self.hasse_edges()]
        return "\n".join(lines + ["}"]) + "\n"


@dataclass(frozen=True)
class Violation:
    kind: str
    subject: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.subject}: {self.detail}"


def _pl_subset(image: PLSet, region: ConvexPolytope) -> bool:
    d = image.ambient_dim
    if d is None:
        return True
    planes = hyperplanes_for(list(image.cells) + region.boundary_cells(), d)
    return all(region.contains(x) for x in arrangement_samples(planes, d) if image.contains(x))


def _pl_disjoint(image: PLSet, region: ConvexPolytope) -> bool:
    d = image.ambient_dim
    if d is None:
        return True
    planes = hyperplanes_for(list(image.cells) + region.boundary_cells(), d)
    return not any(region.contains(x) for x in arrangement_samples(planes, d) if image.contains(x))


def validate(oc: OrbitComplex) -> list[Violation]:
    """Every way the complex contradicts the local structure theory; empty when consistent."""
    out: list[Violation] = []
    ids = oc.ids
    dup = sorted({i for i in ids if ids.count(i) > 1})
    for i in dup:
        out.append(Violation("order", i, "duplicate orbit id"))
    known = set(ids)
    for a, b in oc.closure:
        for x in (a, b):
            if x not in known:
                out.append(Violation("order", x, "closure relation names an unknown orbit"))
        if a == b:
            out.append(Violation("order", a, "orbit listed as lying in its own closure"))
    g = oc._graph
    for cyc in nx.simple_cycles(g):
        if len(cyc) > 1:
            out.append(Violation("order", cyc[0], "closure relations form a cycle through " + ", ".join(cyc)))
    if out:
        return out

    d = oc.delta_tall.dim_ambient
    for msg in oc.delta_tall.convexity_violations():
        out.append(Violation("delta-convexity", "delta_tall", msg))

    for o in oc.orbits:
        if o.moment_image.ambient_dim not in (None, d):
            out.append(Violation("dimension", o.id, f"moment image not in dimension {d}"))
            continue
        if o.model is not None:
            c = classify(o.model)
            if o.model.dim_T != d:
                out.append(Violation("dimension", o.id, f"model torus dimension {o.model.dim_T} != {d}"))
                continue
            if o.declared_tall is not None and o.declared_tall != c.tall:
                out.append(Violation("flag-mismatch", o.id,
                                     f"declared {'tall' if o.declared_tall else 'short'}, model is {'tall' if c.tall else 'short'}"))
            if o.declared_exceptional is not None and o.declared_exceptional != c.exceptional:
                out.append(Violation("flag-mismatch", o.id,
                                     f"declared exceptional={o.declared_exceptional}, model gives {c.exceptional}"))
            if o.moment_image.cells and not o.moment_image.contains(o.model.moment_value):
                out.append(Violation("image-mismatch", o.id, "model moment value is not in the orbit's image"))
        else:
            if o.declared_tall is False and o.declared_exceptional is False:
                out.append(Violation("flag-mismatch", o.id, "short orbits are exceptional"))
        if o.generic and o.exceptional:
            out.append(Violation("finiteness", o.id, "a family of orbits cannot be exceptional"))
        if o.tall and not _pl_subset(o.moment_image, oc.delta_tall):
            out.append(Violation("delta-image", o.id, "tall orbit's image leaves delta_tall"))
        if not o.tall and not _pl_disjoint(o.moment_image, oc.delta_tall):
            out.append(Violation("delta-image", o.id, "short orbit's image meets delta_tall"))

    for q in oc.orbits:
        if q.model is None or q.model.h_embedding is None or q.model.dim_T != d:
            continue
        cone = moment_cone(q.model)
        for oid in oc._ordered(oc.above(q.id)):
            for v in oc.record(oid).moment_image.vertices:
                if not cone_contains(cone, v):
                    out.append(Violation("cone-containment", oid,
                                         f"image vertex {tuple(map(el.fmt_rational, v))} outside the moment cone at {q.id}"))

    for p in oc.orbits:
        if p.model is None or not is_tall(p.model):
            continue
        out += _catchment_violations(oc, p)
    return out


def _catchment_violations(oc: OrbitComplex, p: OrbitRecord) -> list[Violation]:
    poset = catchment_poset(p.model)
    up = [p.id] + oc._ordered(oc.above(p.id))
    if len(up) != len(poset.patterns):
        return [Violation("catchment-mismatch", p.id,
                          f"{len(up) - 1} orbits above, catchment has {len(poset.patterns) - 1} besides the point")]
    sub = nx.transitive_closure(oc._graph.subgraph(up).copy(), reflexive=False)
    ref = nx.transitive_closure(poset.graph(), reflexive=False)
    if not nx.is_isomorphic(sub, ref):
        return [Violation("catchment-mismatch", p.id, "closure order above the orbit is not the catchment poset")]
    return []


def tall_exceptional(oc: OrbitComplex) -> list[str]:
    return [o.id for o in oc.orbits if o.tall and o.exceptional]


def core(oc: OrbitComplex) -> list[str]:
    """Orbits whose closure contains a tall exceptional orbit."""
    hit = set()
    for e in tall_exceptional(oc):
        hit.add(e)
        hit |= oc.above(e)
    return oc._ordered(hit)


def core_closure(oc: OrbitComplex) -> list[str]:
    hit = set()
    for o in core(oc):
        hit.add(o)
        hit |= oc.below(o)
    return oc._ordered(hit)


def tall_core_components(oc: OrbitComplex) -> list[list[str]]:
    """Connected pieces of the tall part of the core closure.

    Two orbits touch when one lies in the closure of the other.
    """
    tall = [o for o in core_closure(oc) if oc.record(o).tall]
    g = nx.Graph()
    g.add_nodes_from(tall)
    for a in tall:
        for b in oc.above(a):
            if b in g:
                g.add_edge(a, b)
    comps = [oc._ordered(c) for c in nx.connected_components(g)]
    order = {i: k for k, i in enumerate(oc.ids)}
    return sorted(comps, key=lambda c: order[c[0]])
