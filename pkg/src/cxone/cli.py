"""Command line front end.

Exit status: 0 on success, 2 when a computation reaches a negative verdict
(a non-injective skeleton, a refused certificate), 1 when the input is
malformed or inconsistent.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import exactlin as el
from . import fixtures, schema
from .cones import caratheodory_cells, locate
from .localmodel import annihilator_basis, classify, lift_weights, moment_cone
from .orbits import ShortCatchment, catchment_poset, core, core_closure, tall_core_components, validate
from .painting import (
    Refusal,
    SkeletonDataError,
    component_homeo_onto_delta,
    component_injectivity,
    triviality_certificate,
)

log = logging.getLogger("cxone")

OK, DATA_ERROR, VERDICT_FAILURE = 0, 1, 2


class DataError(Exception):
    pass


def _fv(v) -> str:
    return "(" + ",".join(el.fmt_rational(x) for x in v) + ")"


def _read(path: str | None, what: str):
    if path is None:
        raise DataError(f"no {what} given; use --input or --fixture")
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise DataError(f"cannot read {path}: {e.strerror}") from None
    return schema.loads(text, path)


def _fixture_doc(name: str, fname: str):
    files = fixtures.golden_files(name)
    if fname not in files:
        raise DataError(f"fixture {name} has no {fname}; available: {', '.join(files)}")
    return schema.loads(files[fname], f"{name}/{fname}")


def _model(args):
    if args.fixture:
        if not args.orbit:
            raise DataError("--fixture needs --orbit to pick a local model")
        doc = _fixture_doc(args.fixture, f"model_{args.orbit}.json")
    else:
        doc = _read(args.input, "local model")
    return schema.parse_local_model(doc)


def _complex(args):
    doc = _fixture_doc(args.fixture, "complex.json") if args.fixture else _read(args.input, "orbit complex")
    oc = schema.parse_orbit_complex(doc)
    problems = validate(oc)
    if problems:
        raise DataError("inconsistent orbit complex:\n" + "\n".join(f"  {p}" for p in problems))
    return oc


def _skeleton(args):
    if args.skeleton:
        doc = _read(args.skeleton, "skeleton")
    elif args.fixture:
        doc = _fixture_doc(args.fixture, "skeleton.json")
    else:
        raise DataError("no skeleton given; use --skeleton or --fixture")
    return schema.parse_skeleton(doc)


def _emit(args, text: str, obj, dot: str | None = None) -> None:
    if args.format == "json":
        sys.stdout.write(schema.dumps(obj))
    elif args.format == "graph":
        if dot is None:
            raise DataError(f"{args.command} has no graph output")
        sys.stdout.write(dot)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# commands ---------------------------------------------------------------------

def cmd_classify(args) -> int:
    m = _model(args)
    c = classify(m)
    head = f"{'tall' if c.tall else 'short'}, {'exceptional' if c.exceptional else 'not exceptional'}, xi={_fv(c.xi_normalized)}"
    lines = [head]
    obj = {"tall": c.tall, "short": c.short, "exceptional": c.exceptional, "xi": list(c.xi_normalized)}
    if m.h_embedding is not None:
        cone = moment_cone(m)
        lines.append(f"moment cone: apex {_fv(cone.apex)}; subspace [{', '.join(map(_fv, cone.subspace_basis))}]; "
                     f"rays [{', '.join(map(_fv, cone.rays))}]")
        obj["moment_cone"] = schema.dump_cone(cone)
    _emit(args, "\n".join(lines), obj)
    return OK


def cmd_decompose(args) -> int:
    m = _model(args)
    if m.h_embedding is None:
        raise DataError("decompose needs a model with h_embedding")
    cells = caratheodory_cells(m.moment_value, annihilator_basis(m), lift_weights(m))
    lines = [f"{len(cells)} cells"]
    lines += [f"C{{{','.join(map(str, c.index_set))}}}: rays [{', '.join(_fv(c.cone.rays[i]) for i in range(len(c.cone.rays)))}]"
              for c in cells]
    obj: dict = {"cells": [{"index_set": list(c.index_set), "cone": schema.dump_cone(c.cone)} for c in cells]}
    if args.point is not None:
        pt = tuple(el.to_rational(x) for x in args.point.split(","))
        if len(pt) != m.dim_T:
            raise DataError(f"--point needs {m.dim_T} coordinates")
        loc = locate(cells, pt)
        if loc is None:
            lines.append(f"point {_fv(pt)}: outside the moment cone")
            obj["location"] = None
        else:
            lines.append(f"point {_fv(pt)}: in C{{{','.join(map(str, loc.index_set))}}}, "
                         f"ray coefficients {_fv(loc.ray_coeffs)}")
            obj["location"] = {"index_set": list(loc.index_set), "subspace_coeffs": list(map(el.fmt_rational, loc.subspace_coeffs)),
                               "ray_coeffs": list(map(el.fmt_rational, loc.ray_coeffs))}
    dot = ["digraph cells {"] + [f'  "{{{",".join(map(str, c.index_set))}}}";' for c in cells]
    sets = {c.index_set for c in cells}
    for I in sorted(sets):
        for J in sorted(sets):
            if len(J) == len(I) + 1 and set(I) <= set(J):
                dot.append(f'  "{{{",".join(map(str, I))}}}" -> "{{{",".join(map(str, J))}}}";')
    _emit(args, "\n".join(lines), obj, "\n".join(dot + ["}"]) + "\n")
    return OK


def cmd_catchment(args) -> int:
    m = _model(args)
    poset = catchment_poset(m)
    lines = [f"{len(poset.patterns)} orbits", "orbits: " + " ".join(map(str, poset.patterns))]
    lines += [f"{a} < {b}" for a, b in poset.hasse]
    obj = {"orbits": [list(p.support) for p in poset.patterns],
           "hasse": [[list(a.support), list(b.support)] for a, b in poset.hasse]}
    _emit(args, "\n".join(lines), obj, poset.to_dot())
    return OK


def cmd_core(args) -> int:
    oc = _complex(args)
    cr, cl, comps = core(oc), core_closure(oc), tall_core_components(oc)
    lines = [f"core: {len(cr)} orbits; closure: {len(cl)} orbits; tall components: {len(comps)}"]
    if args.verbose:
        lines.append("core orbits: " + " ".join(cr))
        lines.append("closure orbits: " + " ".join(cl))
        lines += [f"A{i}: " + " ".join(a) for i, a in enumerate(comps)]
    obj = {"core": cr, "closure": cl, "tall_components": comps}
    _emit(args, "\n".join(lines), obj, oc.to_dot(highlight=cr))
    return OK


def cmd_painting(args) -> int:
    oc = _complex(args)
    skel = _skeleton(args)
    inj = component_injectivity(skel)
    comps = tall_core_components(oc)
    lines = []
    for v in inj:
        lines.append(f"{v.component}: " + ("injective" if v.injective else f"not injective ({v.witness})"))
    for i, a in enumerate(comps):
        hv = component_homeo_onto_delta(oc, a)
        lines.append(f"A{i} {{{', '.join(a)}}}: " + ("homeomorphic onto delta_tall" if hv.ok else f"fails: {hv.witness}"))
    cert = triviality_certificate(oc, skel)
    obj: dict = {"injective": {v.component: v.injective for v in inj}}
    if isinstance(cert, Refusal):
        lines.append(f"no certificate: {cert.status}: {cert.reason}")
        obj["certificate"] = None
        obj["refusal"] = {"status": cert.status, "component": cert.component, "reason": cert.reason}
        status = VERDICT_FAILURE
    else:
        lines.append(f"trivial: basepoint {_fv(cert.basepoint)}")
        lines += [f"  {e.skeleton_component} -> A{e.section} -> {e.label}" for e in cert.entries]
        if args.verbose:
            lines += [f"  check: {c}" for c in cert.checks]
        obj["certificate"] = {
            "basepoint": list(map(el.fmt_rational, cert.basepoint)),
            "entries": [{"component": e.skeleton_component, "section": e.section,
                         "section_orbits": list(e.section_orbits), "label": e.label} for e in cert.entries],
            "sample_times": list(map(el.fmt_rational, cert.sample_times)),
            "checks": list(cert.checks),
        }
        status = OK
    dot = ["graph skeleton {"]
    for c in skel:
        for v in c.vertices:
            style = ", style=dashed" if v.excluded else ""
            dot.append(f'  "{c.id}:{v.id}" [label="{v.id} {_fv(v.image)}"{style}];')
        dot += [f'  "{c.id}:{a}" -- "{c.id}:{b}";' for a, b in c.edges]
    _emit(args, "\n".join(lines), obj, "\n".join(dot + ["}"]) + "\n")
    return status


def cmd_example(args) -> int:
    try:
        paths = fixtures.write_fixture(args.name, Path(args.outdir) / args.name)
    except fixtures.UnknownFixture as e:
        raise DataError(str(e)) from None
    for p in paths:
        print(p)
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="input JSON file")
    common.add_argument("--fixture", choices=fixtures.NAMES, help="use a bundled fixture instead of --input")
    common.add_argument("--format", choices=("text", "graph", "json"), default="text")
    common.add_argument("--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="cxone", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (("classify", cmd_classify, "tall/short/exceptional and moment cone of a local model"),
                               ("decompose", cmd_decompose, "disjoint cell decomposition of a moment cone"),
                               ("catchment", cmd_catchment, "orbit poset of a tall point's catchment")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--orbit", help="with --fixture: which orbit's model")
        if name == "decompose":
            s.add_argument("--point", help="comma separated rational coordinates to locate")
        s.set_defaults(func=fn)

    s = sub.add_parser("core", parents=[common], help="core, its closure and the tall components")
    s.set_defaults(func=cmd_core)
    s = sub.add_parser("painting", parents=[common], help="skeleton injectivity and triviality certificate")
    s.add_argument("--skeleton", help="skeleton JSON file")
    s.set_defaults(func=cmd_painting)

    s = sub.add_parser("example", help="write a bundled fixture's input files")
    s.add_argument("name")
    s.add_argument("--outdir", default=".")
    s.add_argument("--verbose", action="store_true")
    s.set_defaults(func=cmd_example)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (DataError, ShortCatchment, SkeletonDataError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
