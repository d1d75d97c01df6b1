"""The 9-pseudoline non-Pappus arrangement as a stress input.

Dualizing a rational Pappus configuration gives 9 lines with 9 triple points;
one triple point is pulled apart into three simple crossings, which no
straight-line arrangement can imitate while keeping the other eight.
"""
import argparse

from pshelly import suite
from pshelly.generators import PAPPUS_FORCED, PAPPUS_POINTS, dual_wiring, gen_non_pappus, non_pappus_wiring, wiring_faces
from pshelly.instance_io import dumps, wrap


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--flip", action="store_true", help="other resolution of the forced triple point")
    ap.add_argument("-o", "--output", help="write the pseudohalfplane instance here")
    args = ap.parse_args()

    straight, label = dual_wiring(PAPPUS_POINTS)
    print("Pappus dual lines (bottom-to-top at far left):", label)
    print("straight crossings:", straight.crossings)
    w = non_pappus_wiring(flip=args.flip)
    print("non-Pappus crossings:", w.crossings)
    print(f"triple point {PAPPUS_FORCED} resolved; simple={w.is_simple_arrangement} faces={len(wiring_faces(w))}")

    p = gen_non_pappus(flip=args.flip)
    prof = p.profile
    print(f"n={p.n} edges={len(p.edges)} T={prof.topvertices} B={prof.bottomvertices}")
    bad = suite.structure_violations(p)
    print("structure lemmas:", "ok" if not bad else bad)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(dumps(wrap(p, meta={"family": "non-pappus", "flip": args.flip})))


if __name__ == "__main__":
    main()
