"""Acceptance criteria; each test reports one PASS/FAIL line in the summary."""

import random
import time
from fractions import Fraction as F

import pytest

from cxone import exactlin as el
from cxone import fixtures
from cxone.cones import AmbiguousLocation, Blocker, Separator, caratheodory_cells, locate, strict_separator
from cxone.localmodel import (
    LocalModel,
    annihilator_basis,
    classify,
    lift_weights,
    sign_normalized,
    weights_from_xi,
    xi_from_weights,
)
from cxone.orbits import ShortCatchment, catchment_orbits, core, core_closure, tall_core_components, validate
from cxone.painting import (
    Refusal,
    SkeletonComponent,
    SkeletonVertex,
    TrivialityCertificate,
    component_homeo_onto_delta,
    component_injectivity,
    triviality_certificate,
)
from oracles import ConeOracle, gordan_has_blocker, gordan_has_separator, projection_onto_perp

REPORT: list[str] = []


def report(n: int, title: str, ok: bool, detail: str) -> None:
    REPORT.append(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {title}: {detail}")
    assert ok, detail


def _fixture_report(name):
    f = fixtures.load(name)
    oc = f.orbit_complex
    cls = {oid: classify(m) for oid, m in f.models.items()}
    comps = tall_core_components(oc)
    homeo = [component_homeo_onto_delta(oc, a).ok for a in comps]
    cert = triviality_certificate(oc, f.skeleton)
    return f, oc, cls, comps, homeo, cert


def test_criterion_1_cp2():
    t0 = time.perf_counter()
    f, oc, cls, comps, homeo, cert = _fixture_report("cp2")
    dt = time.perf_counter() - t0
    checks = {
        "valid": validate(oc) == [],
        "p0,p2 short": cls["p0"].short and cls["p2"].short,
        "p1,N tall exceptional": all(cls[o].tall and cls[o].exceptional for o in ("p1", "N")),
        "only short points": {o.id for o in oc.orbits if not o.tall} == {"p0", "p2"},
        "exceptional set": {o.id for o in oc.orbits if o.exceptional and o.tall} == {"p1", "N"},
        "catchment p1 = 3": len(catchment_orbits(f.models["p1"])) == 3,
        "core = 4": len(core(oc)) == 4,
        "closure = 6": len(core_closure(oc)) == 6,
        "2 tall components": len(comps) == 2,
        "delta = (-1/2,1/2)": oc.delta_tall.vertices == ((F(-1, 2),), (F(1, 2),))
        and oc.delta_tall.open_faces == {(0,), (1,)},
        "homeomorphic": all(homeo),
        "certificate": isinstance(cert, TrivialityCertificate),
        "< 1 s": dt < 1,
    }
    bad = [k for k, v in checks.items() if not v]
    report(1, "CP2 fixture", not bad, f"{len(checks) - len(bad)}/{len(checks)} checks, {dt * 1000:.1f} ms"
           + (f", failed: {bad}" if bad else ""))


def test_criterion_2_hirzebruch():
    t0 = time.perf_counter()
    f, oc, cls, comps, homeo, cert = _fixture_report("hirzebruch")
    dt = time.perf_counter() - t0
    N = oc.record("N")
    checks = {
        "valid": validate(oc) == [],
        "p tall exceptional": cls["p"].tall and cls["p"].exceptional,
        "q short": cls["q"].short,
        "N tall not exceptional": cls["N"].tall and not cls["N"].exceptional and N.tall and not N.exceptional,
        "only exceptional p,q": {o.id for o in oc.orbits if o.exceptional} == {"p", "q"},
        "catchment p = 3": len(catchment_orbits(f.models["p"])) == 3,
        "core = catchment of p": set(core(oc)) == {"p"} | oc.above("p") and len(core(oc)) == 3,
        "closure = 5": len(core_closure(oc)) == 5,
        "1 tall component": len(comps) == 1,
        "delta = [0,2)": oc.delta_tall.vertices == ((0,), (2,)) and oc.delta_tall.open_faces == {(1,)},
        "homeomorphic": all(homeo),
        "certificate": isinstance(cert, TrivialityCertificate),
        "< 1 s": dt < 1,
    }
    bad = [k for k, v in checks.items() if not v]
    report(2, "Hirzebruch fixture", not bad, f"{len(checks) - len(bad)}/{len(checks)} checks, {dt * 1000:.1f} ms"
           + (f", failed: {bad}" if bad else ""))


def test_criterion_3_gordan():
    rng = random.Random(20261014)
    t0 = time.perf_counter()
    failures, seps = 0, 0
    for _ in range(1000):
        d = rng.randint(1, 4)
        ws = [tuple(F(rng.randint(-5, 5)) for _ in range(d)) for _ in range(rng.randint(0, 6))]
        res = strict_separator(ws, d)
        has_sep, has_blk = gordan_has_separator(ws), gordan_has_blocker(ws)
        if isinstance(res, Separator):
            seps += 1
            ok = has_sep and not has_blk and all(el.dot(w, res.nu) > 0 for w in ws)
        elif isinstance(res, Blocker):
            ok = (has_blk and not has_sep and all(x >= 0 for x in res.x) and any(res.x)
                  and all(v == 0 for v in el.lincomb(res.x, ws, d)))
        else:
            ok = False
        failures += not ok
    dt = time.perf_counter() - t0
    report(3, "Gordan alternative", failures == 0 and dt < 30,
           f"1000 lists ({seps} separators, {1000 - seps} blockers), {failures} failures, {dt:.2f} s")


def _tall_xi(rng):
    while True:
        xi = [rng.randint(0, 4) for _ in range(rng.randint(1, 5))]
        if any(xi):
            s = rng.choice((1, -1))
            return tuple(s * x for x in xi)


def test_criterion_4_disjoint_cover():
    rng = random.Random(7)
    t0 = time.perf_counter()
    failures, inside = 0, 0
    for _ in range(200):
        xi = _tall_xi(rng)
        n = len(xi)
        apex = tuple(F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n))
        # h sits in Q^n as xi-perp; the weights are the coordinate functions restricted to it
        emb = el.kernel_basis([xi], n)
        ws = tuple(tuple(b[i] for b in emb) for i in range(n))
        m = LocalModel(n, xi, apex, ws, tuple(emb))
        cells = caratheodory_cells(m.moment_value, annihilator_basis(m), lift_weights(m))
        oracle = ConeOracle(apex, [xi], projection_onto_perp(xi))
        for k in range(50):
            if k % 2:
                lam = [F(rng.randint(-2, 6), rng.randint(1, 3)) for _ in range(n)]
                off = F(rng.randint(-3, 3), rng.randint(1, 3))
                alpha = tuple(a + sum(l * p[i] for l, p in zip(lam, projection_onto_perp(xi))) + off * xi[i]
                              for i, a in enumerate(apex))
            else:
                alpha = tuple(a + F(rng.randint(-12, 12), rng.randint(1, 4)) for a in apex)
            truth = oracle.contains(alpha)
            inside += truth
            try:
                found = locate(cells, alpha) is not None
            except AmbiguousLocation:
                found = None
            failures += found is not truth
    dt = time.perf_counter() - t0
    report(4, "disjoint cover", failures == 0 and dt < 60 and 0 < inside < 10000,
           f"200 models x 50 points ({inside} inside), {failures} failures, {dt:.2f} s")


def test_criterion_5_round_trip():
    rng = random.Random(5)
    failures = 0
    for _ in range(500):
        xi = ()
        while not any(xi):
            xi = tuple(rng.randint(-9, 9) for _ in range(rng.randint(1, 5)))
        from math import gcd
        from functools import reduce
        g = reduce(gcd, map(abs, xi))
        ws = weights_from_xi(xi)
        m = LocalModel(1, xi, (0,))
        ok = (xi_from_weights(ws) == sign_normalized(tuple(x // g for x in xi))
              and not any(el.lincomb([F(x) for x in xi], ws, len(xi)))
              and not any(el.lincomb([F(x) for x in m.xi], m.weights, len(m.weights[0]))))
        failures += not ok
    report(5, "round trip", failures == 0, f"500 random xi, {failures} failures")


def test_criterion_6_negative_controls():
    checks = {}
    short = LocalModel(1, (2, -1), ("1/2",), ((-1,), (-2,)), ((1,),))
    try:
        catchment_orbits(short)
        checks["short catchment refused"] = False
    except ShortCatchment as e:
        checks["short catchment refused"] = str(e) == "catchment infinite for short points"
    f = fixtures.load("cp2")
    fold = SkeletonComponent("S2", (SkeletonVertex("a", (F(-1, 4),)), SkeletonVertex("b", (F(1, 4),)),
                                    SkeletonVertex("c", (F(0),))), (("a", "b"), ("b", "c")), ("N",))
    checks["non-injective detected"] = not component_injectivity([fold])[0].injective
    r = triviality_certificate(f.orbit_complex, [f.skeleton[0], fold])
    checks["certificate refused"] = isinstance(r, Refusal) and r.status == "not-trivial" and r.component == "S2"
    bad = [k for k, v in checks.items() if not v]
    report(6, "negative controls", not bad, f"{len(checks) - len(bad)}/{len(checks)} controls"
           + (f", failed: {bad}" if bad else ""))
