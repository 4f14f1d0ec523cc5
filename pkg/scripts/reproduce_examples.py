"""Run the whole pipeline on both bundled examples and print a report."""

import argparse
import time

from cxone import fixtures
from cxone.localmodel import classify
from cxone.orbits import catchment_orbits, core, core_closure, tall_core_components, validate
from cxone.painting import Refusal, component_homeo_onto_delta, triviality_certificate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", default=list(fixtures.NAMES))
    args = ap.parse_args()
    for name in args.names:
        t0 = time.perf_counter()
        f = fixtures.load(name)
        oc = f.orbit_complex
        print(f"== {name}")
        print(f"violations: {len(validate(oc))}")
        for oid, m in f.models.items():
            c = classify(m)
            size = len(catchment_orbits(m)) if c.tall else "infinite"
            print(f"  {oid:8s} {'tall' if c.tall else 'short':5s} exceptional={c.exceptional!s:5s} "
                  f"xi={c.xi_normalized} catchment={size}")
        comps = tall_core_components(oc)
        print(f"core: {core(oc)}")
        print(f"closure: {core_closure(oc)}")
        for i, a in enumerate(comps):
            print(f"A{i}: {a} onto delta_tall: {component_homeo_onto_delta(oc, a).ok}")
        cert = triviality_certificate(oc, f.skeleton)
        if isinstance(cert, Refusal):
            print(f"refused: {cert.status}: {cert.reason}")
        else:
            print("certificate: " + ", ".join(f"{e.skeleton_component}->{e.label}" for e in cert.entries))
        print(f"time: {(time.perf_counter() - t0) * 1000:.1f} ms")


if __name__ == "__main__":
    main()
