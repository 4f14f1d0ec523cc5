"""The two bundled worked examples, with their expected invariants.

``cp2``: the circle acting on the projective plane by
``[z0 : z1 : z2] -> [z0 : t z1 : t^2 z2]`` (moment image ``[-1/2, 1/2]``);
away from three fixed points and a ``Z/2``-fixed sphere it acts freely.

``hirzebruch``: a circle action on a Hirzebruch surface with a fixed sphere
at the bottom of the moment image ``[0, 2]`` and isolated fixed points at
heights 1 and 2.

Each fixture is a set of JSON documents (orbit complex, skeleton, and one
local model per orbit that has one).  The documents are stored verbatim in
``cxone/data/<name>/``; `write_fixture` copies those bytes out.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import schema
from .localmodel import LocalModel
from .orbits import OrbitComplex
from .painting import SkeletonComponent

NAMES = ("cp2", "hirzebruch")


class UnknownFixture(KeyError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"unknown fixture '{self.name}'; available: {', '.join(NAMES)}"


def _pt(x):
    return {"vertices": [[x]]}


def _seg(a, b, closed=()):
    c: dict = {"vertices": [[a], [b]]}
    if closed:
        c["closed_faces"] = [[i] for i in closed]
    return c


def _fixed(xi, w, phi):
    return {"dim_T": 1, "xi": list(xi), "weights": [[x] for x in w], "moment_value": [phi], "h_embedding": [["1"]]}


_CP2_COMPLEX = {
    "orbits": [
        {"id": "p0", "model": _fixed((2, -1), ("-1", "-2"), "1/2"), "moment_image": [_pt("1/2")]},
        {"id": "p1", "model": _fixed((1, 1), ("1", "-1"), "0"), "moment_image": [_pt("0")]},
        {"id": "p2", "model": _fixed((1, -2), ("2", "1"), "-1/2"), "moment_image": [_pt("-1/2")]},
        {"id": "e0", "moment_image": [_seg("-1/2", "0")]},
        {"id": "e2", "moment_image": [_seg("0", "1/2")]},
        {"id": "N", "model": {"dim_T": 1, "xi": [2], "moment_value": ["0"], "h_embedding": []},
         "moment_image": [_seg("-1/2", "1/2")]},
        {"id": "generic", "generic": True, "moment_image": [_seg("-1/2", "1/2")]},
    ],
    "closure": [["p1", "e0"], ["p2", "e0"], ["p1", "e2"], ["p0", "e2"],
                ["p0", "N"], ["p2", "N"], ["p0", "generic"], ["p2", "generic"]],
    "delta_tall": {"vertices": [["-1/2"], ["1/2"]], "open_faces": [[0], [1]]},
}

_CP2_SKELETON = {
    "components": [
        {"id": "S1", "orbits": ["p1"], "vertices": [{"id": "p1", "image": ["0"]}], "edges": []},
        {"id": "S2", "orbits": ["N"],
         "vertices": [{"id": "n-", "image": ["-1/2"], "excluded": True},
                      {"id": "n+", "image": ["1/2"], "excluded": True}],
         "edges": [["n-", "n+"]]},
    ]
}

_HIRZ_COMPLEX = {
    "orbits": [
        {"id": "n0", "model": _fixed((1, 0), ("0", "1"), "0"), "moment_image": [_pt("0")]},
        {"id": "p", "model": _fixed((1, 1), ("-1", "1"), "1"), "moment_image": [_pt("1")]},
        {"id": "q", "model": _fixed((1, -1), ("-1", "-1"), "2"), "moment_image": [_pt("2")]},
        {"id": "e3", "moment_image": [_seg("0", "1")]},
        {"id": "e1", "moment_image": [_seg("1", "2")]},
        {"id": "e2", "moment_image": [_seg("0", "2")]},
        {"id": "N", "generic": True, "tall": True, "exceptional": False, "moment_image": [_pt("0")]},
        {"id": "generic", "generic": True, "moment_image": [_seg("0", "2")]},
    ],
    "closure": [["n0", "e3"], ["p", "e3"], ["p", "e1"], ["q", "e1"],
                ["q", "e2"], ["N", "e2"], ["q", "generic"], ["N", "generic"]],
    "delta_tall": {"vertices": [["0"], ["2"]], "open_faces": [[1]]},
}

_HIRZ_SKELETON = {
    "components": [
        {"id": "S1", "orbits": ["p"], "vertices": [{"id": "p", "image": ["1"]}], "edges": []},
    ]
}

# the minimal fixed sphere, seen at a point away from the other curves
_HIRZ_N_MODEL = {"dim_T": 1, "xi": [1, 0], "weights": [["0"], ["1"]], "moment_value": ["0"], "h_embedding": [["1"]]}

EXPECTED = {
    "cp2": {
        "classification": {
            "p0": (False, True, (2, -1)),
            "p1": (True, True, (1, 1)),
            "p2": (False, True, (1, -2)),
            "N": (True, True, (2,)),
        },
        "tall_exceptional": ["p1", "N"],
        "catchment_sizes": {"p1": 3, "N": 1},
        "core": ["p1", "e0", "e2", "N"],
        "core_closure": ["p0", "p1", "p2", "e0", "e2", "N"],
        "tall_components": [["p1", "e0", "e2"], ["N"]],
        "basepoint": ("0",),
        "labels": ["p1", "N"],
    },
    "hirzebruch": {
        "classification": {
            "n0": (True, False, (1, 0)),
            "p": (True, True, (1, 1)),
            "q": (False, True, (1, -1)),
            "N": (True, False, (1, 0)),
        },
        "tall_exceptional": ["p"],
        "catchment_sizes": {"n0": 2, "p": 3},
        "core": ["p", "e3", "e1"],
        "core_closure": ["n0", "p", "q", "e3", "e1"],
        "tall_components": [["n0", "p", "e3", "e1"]],
        "basepoint": ("1",),
        "labels": ["p"],
    },
}


def documents(name: str) -> dict[str, dict]:
    """File name -> JSON document for the fixture, built from the definitions above."""
    if name == "cp2":
        docs = {"complex.json": _CP2_COMPLEX, "skeleton.json": _CP2_SKELETON}
        models = {o["id"]: o["model"] for o in _CP2_COMPLEX["orbits"] if "model" in o}
    elif name == "hirzebruch":
        docs = {"complex.json": _HIRZ_COMPLEX, "skeleton.json": _HIRZ_SKELETON}
        models = {o["id"]: o["model"] for o in _HIRZ_COMPLEX["orbits"] if "model" in o}
        models["N"] = _HIRZ_N_MODEL
    else:
        raise UnknownFixture(name)
    for oid, m in models.items():
        docs[f"model_{oid}.json"] = m
    return docs


def render(name: str) -> dict[str, str]:
    """The fixture files as text, after a parse/dump pass through the schema layer."""
    out = {}
    for fname, doc in documents(name).items():
        if fname == "complex.json":
            obj = schema.dump_orbit_complex(schema.parse_orbit_complex(doc))
        elif fname == "skeleton.json":
            obj = schema.dump_skeleton(schema.parse_skeleton(doc))
        else:
            obj = schema.dump_local_model(schema.parse_local_model(doc))
        out[fname] = schema.dumps(obj)
    return out


def golden_dir(name: str):
    if name not in NAMES:
        raise UnknownFixture(name)
    return resources.files("cxone") / "data" / name


def golden_files(name: str) -> dict[str, str]:
    d = golden_dir(name)
    return {p.name: p.read_text() for p in sorted(d.iterdir(), key=lambda p: p.name) if p.name.endswith(".json")}


def write_fixture(name: str, outdir: str | Path) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for fname, text in golden_files(name).items():
        p = outdir / fname
        p.write_text(text)
        written.append(p)
    return written


@dataclass(frozen=True)
class Fixture:
    name: str
    orbit_complex: OrbitComplex
    skeleton: list[SkeletonComponent]
    models: dict[str, LocalModel]
    expected: dict


def load(name: str) -> Fixture:
    files = golden_files(name)
    oc = schema.parse_orbit_complex(schema.loads(files["complex.json"]))
    sk = schema.parse_skeleton(schema.loads(files["skeleton.json"]))
    models = {f[len("model_"):-len(".json")]: schema.parse_local_model(schema.loads(t))
              for f, t in files.items() if f.startswith("model_")}
    return Fixture(name, oc, sk, models, EXPECTED[name])
