"""Differential property suite over a seed range, with a per-family summary."""
import argparse
import sys

from pshelly import suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=1000)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--max-m", type=int, default=12)
    ap.add_argument("--no-fixtures", dest="fixtures", action="store_false")
    args = ap.parse_args()

    rep = suite.run_suite(range(args.seeds), args.max_n, args.max_m, fixtures=args.fixtures)
    for line in rep.lines():
        print(line)
    for check, count in sorted(suite.lemma_summary(rep).items()):
        print(f"  {check}: {count} violations")
    return 0 if rep.ok else 2


if __name__ == "__main__":
    sys.exit(main())
