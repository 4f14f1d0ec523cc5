"""JSON encodings of models, cones, orbit complexes and skeleta.

Rationals are written as ``"p/q"`` strings (``"p"`` when integral); on input,
JSON integers are also accepted but JSON floats are refused.  Parse errors
carry the JSON path of the offending field.
"""

from __future__ import annotations

import json
from typing import Any

from . import exactlin as el
from .cones import Cone
from .localmodel import LocalModel
from .orbits import OrbitComplex, OrbitRecord
from .painting import MalformedSkeleton, SkeletonComponent, SkeletonVertex
from .plgeom import ConvexPolytope, PLSet, Simplex, cell_pieces


class SchemaError(ValueError):
    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path or '<root>'}: {message}")


def loads(text: str, what: str = "input") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"line {e.lineno}, column {e.colno}", f"invalid JSON in {what}: {e.msg}") from None


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _get(d: Any, key: str, path: str, required: bool = True, default=None):
    if not isinstance(d, dict):
        raise SchemaError(path, "expected an object")
    if key not in d:
        if required:
            raise SchemaError(path, f"missing field '{key}'")
        return default
    return d[key]


def _list(x, path: str) -> list:
    if not isinstance(x, list):
        raise SchemaError(path, "expected a list")
    return x


def _rational(x, path: str):
    if isinstance(x, float):
        raise SchemaError(path, f"floating point value {x!r}; write rationals as \"p/q\" strings")
    try:
        return el.to_rational(x)
    except (TypeError, ValueError) as e:
        raise SchemaError(path, str(e)) from None


def _rvec(x, path: str) -> el.RationalVec:
    return tuple(_rational(v, f"{path}[{i}]") for i, v in enumerate(_list(x, path)))


def _int(x, path: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(path, f"expected an integer, got {x!r}")
    return x


def _bool(x, path: str) -> bool:
    if not isinstance(x, bool):
        raise SchemaError(path, f"expected true or false, got {x!r}")
    return x


def _fv(v) -> list[str]:
    return [el.fmt_rational(x) for x in v]


# Local models -------------------------------------------------------------

def parse_local_model(d: Any, path: str = "") -> LocalModel:
    dim_T = _int(_get(d, "dim_T", path), f"{path}.dim_T")
    xi = tuple(_int(v, f"{path}.xi[{i}]") for i, v in enumerate(_list(_get(d, "xi", path), f"{path}.xi")))
    mv = _rvec(_get(d, "moment_value", path), f"{path}.moment_value")
    w = _get(d, "weights", path, required=False)
    ws = None if w is None else tuple(_rvec(v, f"{path}.weights[{i}]") for i, v in enumerate(_list(w, f"{path}.weights")))
    e = _get(d, "h_embedding", path, required=False)
    emb = None if e is None else tuple(_rvec(v, f"{path}.h_embedding[{i}]") for i, v in enumerate(_list(e, f"{path}.h_embedding")))
    try:
        return LocalModel(dim_T, xi, mv, ws, emb)
    except ValueError as err:
        raise SchemaError(path, str(err)) from None


def dump_local_model(m: LocalModel) -> dict:
    out: dict = {"dim_T": m.dim_T, "xi": list(m.xi), "weights": [_fv(w) for w in m.weights],
                 "moment_value": _fv(m.moment_value)}
    if m.h_embedding is not None:
        out["h_embedding"] = [_fv(r) for r in m.h_embedding]
    return out


# Cones ----------------------------------------------------------------------

def dump_cone(c: Cone) -> dict:
    return {
        "ambient_dim": c.ambient_dim,
        "apex": _fv(c.apex),
        "subspace_basis": [_fv(v) for v in c.subspace_basis],
        "rays": [_fv(v) for v in c.rays],
        "open_rays": sorted(c.open_rays),
    }


def parse_cone(d: Any, path: str = "") -> Cone:
    n = _int(_get(d, "ambient_dim", path), f"{path}.ambient_dim")
    apex = _rvec(_get(d, "apex", path), f"{path}.apex")
    sub = tuple(_rvec(v, f"{path}.subspace_basis[{i}]") for i, v in enumerate(_list(_get(d, "subspace_basis", path, False, []), f"{path}.subspace_basis")))
    rays = tuple(_rvec(v, f"{path}.rays[{i}]") for i, v in enumerate(_list(_get(d, "rays", path, False, []), f"{path}.rays")))
    opens = frozenset(_int(v, f"{path}.open_rays[{i}]") for i, v in enumerate(_list(_get(d, "open_rays", path, False, []), f"{path}.open_rays")))
    try:
        return Cone(n, apex, sub, rays, opens)
    except ValueError as err:
        raise SchemaError(path, str(err)) from None


# PL sets and polytopes ------------------------------------------------------

def parse_plset(x: Any, path: str) -> PLSet:
    cells = []
    for i, c in enumerate(_list(x, path)):
        p = f"{path}[{i}]"
        vs = [_rvec(v, f"{p}.vertices[{j}]") for j, v in enumerate(_list(_get(c, "vertices", p), f"{p}.vertices"))]
        faces = _get(c, "closed_faces", p, required=False, default="open")
        if not isinstance(faces, str):
            faces = [[_int(k, f"{p}.closed_faces[{j}]") for k in _list(f, f"{p}.closed_faces[{j}]")]
                     for j, f in enumerate(_list(faces, f"{p}.closed_faces"))]
        elif faces not in ("open", "closed"):
            raise SchemaError(f"{p}.closed_faces", "expected \"open\", \"closed\" or a list of faces")
        try:
            cells += cell_pieces(vs, faces)
        except ValueError as err:
            raise SchemaError(p, str(err)) from None
    return PLSet(tuple(cells))


def dump_plset(s: PLSet) -> list:
    return [{"vertices": [_fv(v) for v in c.vertices]} for c in s.cells]


def parse_polytope(d: Any, path: str) -> ConvexPolytope:
    vs = [_rvec(v, f"{path}.vertices[{i}]") for i, v in enumerate(_list(_get(d, "vertices", path), f"{path}.vertices"))]
    faces = [[_int(k, f"{path}.open_faces[{i}]") for k in _list(f, f"{path}.open_faces[{i}]")]
             for i, f in enumerate(_list(_get(d, "open_faces", path, False, []), f"{path}.open_faces"))]
    try:
        return ConvexPolytope(vs, faces)
    except ValueError as err:
        raise SchemaError(path, str(err)) from None


def dump_polytope(p: ConvexPolytope) -> dict:
    return {"vertices": [_fv(v) for v in p.vertices], "open_faces": [list(f) for f in sorted(p.open_faces)]}


# Orbit complexes ----------------------------------------------------------

def parse_orbit_complex(d: Any, path: str = "") -> OrbitComplex:
    recs = []
    for i, o in enumerate(_list(_get(d, "orbits", path), f"{path}.orbits")):
        p = f"{path}.orbits[{i}]"
        oid = _get(o, "id", p)
        if not isinstance(oid, str):
            raise SchemaError(f"{p}.id", "expected a string")
        m = _get(o, "model", p, required=False)
        model = None if m is None else parse_local_model(m, f"{p}.model")
        image = parse_plset(_get(o, "moment_image", p), f"{p}.moment_image")
        generic = _bool(_get(o, "generic", p, False, False), f"{p}.generic")
        tall = _get(o, "tall", p, required=False)
        exc = _get(o, "exceptional", p, required=False)
        recs.append(OrbitRecord(
            oid, image, model, generic,
            None if tall is None else _bool(tall, f"{p}.tall"),
            None if exc is None else _bool(exc, f"{p}.exceptional"),
        ))
    closure = []
    for i, pair in enumerate(_list(_get(d, "closure", path, False, []), f"{path}.closure")):
        pair = _list(pair, f"{path}.closure[{i}]")
        if len(pair) != 2 or not all(isinstance(x, str) for x in pair):
            raise SchemaError(f"{path}.closure[{i}]", "expected [below, above] orbit ids")
        closure.append(tuple(pair))
    delta = parse_polytope(_get(d, "delta_tall", path), f"{path}.delta_tall")
    return OrbitComplex(tuple(recs), tuple(closure), delta)


def dump_orbit_complex(oc: OrbitComplex) -> dict:
    orbits = []
    for o in oc.orbits:
        r: dict = {"id": o.id}
        if o.generic:
            r["generic"] = True
        if o.declared_tall is not None:
            r["tall"] = o.declared_tall
        if o.declared_exceptional is not None:
            r["exceptional"] = o.declared_exceptional
        if o.model is not None:
            r["model"] = dump_local_model(o.model)
        r["moment_image"] = dump_plset(o.moment_image)
        orbits.append(r)
    return {"orbits": orbits, "closure": [list(p) for p in oc.closure], "delta_tall": dump_polytope(oc.delta_tall)}


# Skeleta ----------------------------------------------------------------------

def parse_skeleton(d: Any, path: str = "") -> list[SkeletonComponent]:
    comps = []
    for i, c in enumerate(_list(_get(d, "components", path), f"{path}.components")):
        p = f"{path}.components[{i}]"
        verts = []
        for j, v in enumerate(_list(_get(c, "vertices", p), f"{p}.vertices")):
            q = f"{p}.vertices[{j}]"
            verts.append(SkeletonVertex(str(_get(v, "id", q)), _rvec(_get(v, "image", q), f"{q}.image"),
                                        _bool(_get(v, "excluded", q, False, False), f"{q}.excluded")))
        edges = []
        for j, e in enumerate(_list(_get(c, "edges", p, False, []), f"{p}.edges")):
            e = _list(e, f"{p}.edges[{j}]")
            if len(e) != 2:
                raise SchemaError(f"{p}.edges[{j}]", "expected [v, w]")
            edges.append((str(e[0]), str(e[1])))
        orbits = tuple(str(x) for x in _list(_get(c, "orbits", p, False, []), f"{p}.orbits"))
        try:
            comps.append(SkeletonComponent(str(_get(c, "id", p)), tuple(verts), tuple(edges), orbits))
        except MalformedSkeleton as err:
            raise SchemaError(p, str(err)) from None
    return comps


def dump_skeleton(comps: list[SkeletonComponent]) -> dict:
    out = []
    for c in comps:
        verts = []
        for v in c.vertices:
            r: dict = {"id": v.id, "image": _fv(v.image)}
            if v.excluded:
                r["excluded"] = True
            verts.append(r)
        out.append({"id": c.id, "orbits": list(c.orbits), "vertices": verts, "edges": [list(e) for e in c.edges]})
    return {"components": out}


def dump_simplex(s: Simplex) -> list:
    return [_fv(v) for v in s.vertices]
