"""Command-line front end.

Exit codes: 0 success, 1 theorem precondition not met, 2 theorem
contradiction (an implementation bug), 3 parse/validation error, 4 oracle
budget exceeded.
"""
from __future__ import annotations

import argparse
import io
import random
import shlex
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import coloring, generators, helly, oracle, suite
from .core import OrderedHypergraph, PreconditionError, TheoremContradiction, ValidationError
from .helly import DeltaHypergraph
from .instance_io import Instance, dumps, loads, wrap
from .structure import PshpHypergraph

EXIT_OK, EXIT_PRECONDITION, EXIT_CONTRADICTION, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3, 4

HIT_MODES = {
    "aba2": ("hit_aba_2", helly.hit_aba_2, "aba"),
    "pshp-pairwise": ("hit_pshp_pairwise", helly.hit_pshp_pairwise, "pshp"),
    "pshp-triple": ("hit_pshp_triplewise", helly.hit_pshp_triplewise, "pshp"),
    "hemi": ("hit_hemi_pairwise", helly.hit_hemi_pairwise, "hemi"),
}
COVER_MODES = {
    "aba2": ("cover_aba_2", helly.cover_aba_2, "aba"),
    "pshp-triple": ("cover_pshp_3wise", helly.cover_pshp_3wise, "pshp"),
    "pshp-pairwise": ("cover_pshp_pairwise", helly.cover_pshp_pairwise, "pshp"),
    "hemi": ("cover_hemi_pairwise", helly.cover_hemi_pairwise, "hemi"),
}
COLOR_MODES = {
    "aba3": ("color_aba_3", coloring.color_aba_3, "aba"),
    "pshp4": ("color_pshp_4", coloring.color_pshp_4, "pshp"),
    "dual3": ("color_dual_pshp_3", coloring.color_dual_pshp_3, "dual"),
}


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str) -> Instance:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise CliError(EXIT_INVALID, f"cannot read {path}: {exc}") from exc
    return loads(text)


def _write(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _coerce(inst: Instance, want: str):
    """The object a mode operates on; ABA-free files promote to all-top pshp."""
    obj = inst.obj
    if want == "aba":
        if isinstance(obj, OrderedHypergraph):
            return obj
        if isinstance(obj, PshpHypergraph):
            raise CliError(EXIT_INVALID, "mode needs an aba or plain file, got pshp")
    elif want == "pshp":
        if isinstance(obj, PshpHypergraph):
            return obj
        if isinstance(obj, OrderedHypergraph):
            try:
                return PshpHypergraph.from_sides(obj.n, obj.edges, [])
            except ValidationError as exc:
                raise PreconditionError(f"not a pseudohalfplane family with all edges as topsets: {exc}", exc.witness) from exc
    elif isinstance(obj, DeltaHypergraph):
        return obj
    raise CliError(EXIT_INVALID, f"mode needs a {'dual_pshp' if want == 'dual' else 'hemi or dual_pshp'} file, got {inst.kind}")


def _contradiction(inst: Instance, check: str, exc: Exception) -> int:
    cert = {"type": "contradiction", "check": check, "message": str(exc), "replay": suite.replay_command(check)}
    out = Instance(inst.kind, inst.obj, inst.points, inst.meta, cert, inst.seed)
    sys.stderr.write(f"theorem contradiction in {check}: {exc}\n")
    sys.stdout.write(dumps(out))
    return EXIT_CONTRADICTION


def _emit(inst: Instance, cert: dict, as_json: bool, human: str) -> None:
    if as_json:
        sys.stdout.write(dumps(Instance(inst.kind, inst.obj, inst.points, inst.meta, cert, inst.seed)))
    else:
        print(human)


def _fmt(vs) -> str:
    return " ".join(map(str, vs)) if len(vs) else "(none)"


# ---------------------------------------------------------------- subcommands


def cmd_verify(args) -> int:
    inst = _read(args.file)
    cert = inst.certificate or {}
    if cert.get("type") == "contradiction" and cert.get("replay"):
        argv = shlex.split(cert["replay"])
        print(f"replaying: {cert['replay']}", file=sys.stderr)
        bare = Instance(inst.kind, inst.obj, inst.points, inst.meta, None, inst.seed)
        return _run_on(argv, bare)
    h = inst.hypergraph
    print(f"ok: kind={inst.kind} n={inst.n} m={h.m}")
    return EXIT_OK


def cmd_extremal(args) -> int:
    inst = _read(args.file)
    p = _coerce(inst, "pshp")
    prof = p.profile
    print(f"T: {_fmt(prof.topvertices)}")
    print(f"B: {_fmt(prof.bottomvertices)}")
    print(f"slots: {_fmt(prof.slot_vertices)}")
    if args.check:
        bad = suite.structure_violations(p)
        for lemma, detail in bad:
            print(f"lemma {lemma} fails: {detail}")
        if bad:
            return _contradiction(inst, f"lemma:{bad[0][0]}", TheoremContradiction(bad[0][1]))
        print("structure lemmas: ok")
    return EXIT_OK


def _theorem(inst: Instance, table: dict, mode: str, as_json: bool, hitting: bool) -> int:
    check, func, want = table[mode]
    obj = _coerce(inst, want)
    try:
        cert = func(obj)
    except TheoremContradiction as exc:
        return _contradiction(inst, check, exc)
    if hitting:
        body = {"type": "hitting_set", "check": check, "vertices": list(cert.vertices), "bound": cert.bound}
        human = f"hitting set: {_fmt(cert.vertices)} (size {len(cert.vertices)}, bound {cert.bound})"
    else:
        h = helly.as_hypergraph(obj)
        body = {"type": "cover", "check": check, "edges": list(cert.edge_indices), "bound": cert.bound}
        shown = "; ".join(_fmt(h.edges[i]) for i in cert.edge_indices)
        human = f"cover: edges {_fmt(cert.edge_indices)} = [{shown}] (size {len(cert.edge_indices)}, bound {cert.bound})"
    _emit(inst, body, as_json, human)
    return EXIT_OK


def cmd_hit(args) -> int:
    return _theorem(_read(args.file), HIT_MODES, args.mode, args.json, True)


def cmd_cover(args) -> int:
    return _theorem(_read(args.file), COVER_MODES, args.mode, args.json, False)


def cmd_color(args) -> int:
    inst = _read(args.file)
    check, func, want = COLOR_MODES[args.mode]
    obj = _coerce(inst, want)
    try:
        col = func(obj)
    except TheoremContradiction as exc:
        return _contradiction(inst, check, exc)
    if not coloring.is_proper(helly.as_hypergraph(obj), col):
        return _contradiction(inst, check, TheoremContradiction(f"improper coloring {col.color}"))
    body = {"type": "coloring", "check": check, "colors": list(col.color), "palette": col.palette_size}
    _emit(inst, body, args.json, f"coloring: {_fmt(col.color)} (proper, {len(set(col.color))} of {col.palette_size} colors)")
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.replace(",", " ").split()]


def _crossing_list(text: str) -> tuple:
    """'0 1 2:3' -> (0, 1, (2, 3)); t:k reverses k tracks starting at t."""
    out = []
    for tok in text.replace(",", " ").split():
        t, _, k = tok.partition(":")
        out.append((int(t), int(k)) if k else int(t))
    return tuple(out)


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    meta: dict = {}
    points = None
    kind = args.kind
    if kind == "halfplane":
        if args.points:
            ps = generators.PointSet.of(tuple(pt.split(",")) for pt in args.points.split())
        else:
            ps = generators.random_point_set(args.n or 6, rng)
        obj = generators.gen_halfplane(ps)
        points = list(ps.points)
    elif kind == "h0":
        obj = generators.gen_h0(args.k)
    elif kind == "minus-one":
        obj = generators.gen_all_subsets_minus_one(args.size)
    elif kind == "blocks":
        obj = generators.gen_disjoint_blocks(_int_list(args.blocks))
    elif kind == "random-aba":
        obj, short = generators.gen_random_abafree(args.n or 8, args.m, args.seed)
        meta["short"] = short
    elif kind == "random-pshp":
        obj, short = generators.gen_random_pshp(args.n or 8, args.m, args.seed)
        meta["short"] = short
    elif kind == "wiring":
        if args.non_pappus:
            w = generators.non_pappus_wiring(args.sides.split(",") if args.sides else None, args.flip)
        elif args.crossings is not None:
            sides = tuple(args.sides.split(",")) if args.sides else ("above",) * args.lines
            w = generators.WiringDiagram(args.lines, _crossing_list(args.crossings), sides)
        else:
            w = generators.random_wiring(args.lines, rng, loose=args.loose)
        meta["wiring"] = {"m": w.m, "crossings": [c if isinstance(c, int) else list(c) for c in w.crossings], "sides": list(w.sides)}
        obj = generators.gen_from_wiring(w)
    else:
        obj = generators.gen_k4()
        points = [tuple(map(Fraction, pt)) for pt in generators.K4_POINTS]
    inst = wrap(obj, points=points, meta=meta)
    if kind in ("random-aba", "random-pshp", "wiring") or (kind == "halfplane" and not args.points):
        inst.seed = args.seed
    _write(dumps(inst), args.output)
    return EXIT_OK


def _oracle_budget(args) -> oracle.OracleBudget:
    return oracle.OracleBudget(args.max_n, args.max_m, args.max_size, args.time_cap)


def cmd_oracle(args) -> int:
    inst = _read(args.file)
    budget = _oracle_budget(args)
    h = inst.hypergraph
    if args.what == "min-hit":
        best = oracle.min_hitting_set(h, budget)
        body = {"type": "min_hitting_set", "size": len(best), "vertices": list(best)}
        human = f"{len(best)}\nvertices: {_fmt(best)}"
    elif args.what == "min-cover":
        best = oracle.min_cover(h, budget)
        body = {"type": "min_cover", "size": len(best), "edges": list(best)}
        human = f"{len(best)}\nedges: {_fmt(best)}"
    elif args.what == "chromatic":
        chi = oracle.chromatic_number(h, cap=args.cap, budget=budget)
        if chi is None:
            raise oracle.BudgetError(f"chromatic number exceeds cap {args.cap}")
        body = {"type": "chromatic_number", "value": chi}
        human = str(chi)
    else:
        wb = oracle.OracleBudget(min(args.max_n, 8), max(args.max_m, 64), args.max_size, args.time_cap)
        if isinstance(inst.obj, DeltaHypergraph) or args.dual:
            found = oracle.find_dual_pshp_witness(h, search_orders=args.orders, budget=wb)
            if found is None:
                body, human = {"type": "dual_witness", "found": False}, "none"
            else:
                order, x = found
                body = {"type": "dual_witness", "found": True, "order": list(order), "X": sorted(x)}
                human = f"order: {_fmt(order)}\nX: {_fmt(sorted(x))}"
        else:
            found = oracle.find_pshp_witness(h, search_orders=args.orders, budget=wb)
            if found is None:
                body, human = {"type": "pshp_witness", "found": False}, "none"
            else:
                order, labels = found
                body = {"type": "pshp_witness", "found": True, "order": list(order), "labels": list(labels)}
                human = f"order: {_fmt(order)}\nlabels: {_fmt(labels)}"
    _emit(inst, body, args.json, human)
    return EXIT_OK


def _seed_range(text: str) -> range:
    try:
        if ".." in text:
            a, b = text.split("..")
            return range(int(a), int(b) + 1)
        return range(int(text))
    except ValueError as exc:
        raise CliError(EXIT_INVALID, f"--seeds: expected A..B or a count, got {text!r}") from exc


def _chunk(args_tuple):
    seeds, max_n, max_m, fixtures = args_tuple
    return suite.run_suite(seeds, max_n, max_m, fixtures=fixtures)


def cmd_suite(args) -> int:
    seeds = _seed_range(args.seeds)
    if args.jobs > 1:
        size = max(1, len(seeds) // (args.jobs * 4))
        chunks = [(seeds[i:i + size], args.max_n, args.max_m, i == 0 and args.fixtures) for i in range(0, len(seeds), size)]
        report = suite.SuiteReport()
        start = time.monotonic()
        with ProcessPoolExecutor(args.jobs) as pool:
            for part in pool.map(_chunk, chunks):  # map keeps seed order
                report.merge(part)
        report.seconds = time.monotonic() - start
    else:
        report = suite.run_suite(seeds, args.max_n, args.max_m, fixtures=args.fixtures)
    for line in report.lines():
        print(line)
    if report.ok:
        return EXIT_OK
    for i, v in enumerate(report.violations):
        text = dumps(v.replayable())
        if args.out:
            _write(text, f"{args.out.rstrip('/')}/violation-{i:04d}.json")
        if i < args.show:
            sys.stdout.write(text)
    return EXIT_CONTRADICTION


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pshelly", description="Helly-type hitting sets, covers and colorings for ABA-free and pseudohalfplane hypergraphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_file(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", nargs="?", default="-", help="instance file (default: stdin)")
        return p

    with_file("verify", "validate an instance, or replay a contradiction certificate").set_defaults(func=cmd_verify)
    e = with_file("extremal", "topvertices, bottomvertices and the circular slot order")
    e.add_argument("--check", action="store_true", help="also check the extremal-vertex lemmas")
    e.set_defaults(func=cmd_extremal)
    for name, table, func in (("hit", HIT_MODES, cmd_hit), ("cover", COVER_MODES, cmd_cover), ("color", COLOR_MODES, cmd_color)):
        p = with_file(name, f"{name} certificate")
        p.add_argument("--mode", required=True, choices=list(table))
        p.add_argument("--json", action="store_true", help="emit the instance with a certificate object")
        p.set_defaults(func=func)

    g = sub.add_parser("gen", help="generate an instance file")
    g.add_argument("--kind", required=True, choices=["halfplane", "h0", "minus-one", "blocks", "random-aba", "random-pshp", "wiring", "k4"])
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--n", type=int, help="vertices (random kinds, random point sets)")
    g.add_argument("--m", type=int, default=8, help="edges to sample (random kinds)")
    g.add_argument("--k", type=int, default=2, help="h0 block size")
    g.add_argument("--size", type=int, default=3, help="ground set size for minus-one")
    g.add_argument("--blocks", default="1,1,1", help="block sizes, comma separated")
    g.add_argument("--points", help="'x,y x,y ...' rationals for halfplane")
    g.add_argument("--lines", type=int, default=4, help="pseudolines for wiring")
    g.add_argument("--crossings", help="explicit crossings for wiring: track t, or t:k for k lines meeting")
    g.add_argument("--non-pappus", action="store_true", help="wiring: the 9-line non-Pappus arrangement")
    g.add_argument("--flip", action="store_true", help="wiring: the other resolution of the non-Pappus triple point")
    g.add_argument("--sides", help="explicit sides (above/below) for wiring")
    g.add_argument("--loose", type=float, default=0.0, help="chance to stop a random wiring early")
    g.add_argument("-o", "--output", default="-")
    g.set_defaults(func=cmd_gen)

    o = with_file("oracle", "exhaustive oracles")
    o.add_argument("--what", required=True, choices=["min-hit", "min-cover", "chromatic", "witness"])
    o.add_argument("--orders", action="store_true", help="witness: search all vertex orders")
    o.add_argument("--dual", action="store_true", help="witness: look for a dual pseudohalfplane realization")
    o.add_argument("--cap", type=int, default=6, help="chromatic: largest palette tried")
    o.add_argument("--max-n", type=int, default=16)
    o.add_argument("--max-m", type=int, default=200)
    o.add_argument("--max-size", type=int, default=5, help="largest hitting set / cover tried")
    o.add_argument("--time-cap", type=float, default=60.0)
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=cmd_oracle)

    s = sub.add_parser("suite", help="differential property suite")
    s.add_argument("--seeds", default="0..999", help="A..B inclusive, or a count")
    s.add_argument("--max-n", type=int, default=10)
    s.add_argument("--max-m", type=int, default=12)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--no-fixtures", dest="fixtures", action="store_false", help="skip the fixed non-Pappus and K4 inputs")
    s.add_argument("--show", type=int, default=1, help="violation certificates printed")
    s.add_argument("--out", help="directory for all violation certificates")
    s.set_defaults(func=cmd_suite)
    return ap


def _dispatch(args) -> int:
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValidationError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except PreconditionError as exc:
        witness = f" (witness: {exc.witness})" if exc.witness is not None else ""
        print(f"precondition failed: {exc}{witness}", file=sys.stderr)
        return EXIT_PRECONDITION
    except oracle.BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except TheoremContradiction as exc:
        print(f"theorem contradiction: {exc}", file=sys.stderr)
        return EXIT_CONTRADICTION


def _run_on(argv: list[str], inst: Instance) -> int:
    """Run a subcommand against an in-memory instance (certificate replay)."""
    args = build_parser().parse_args(argv + ["-"])
    real = sys.stdin
    sys.stdin = io.StringIO(dumps(inst))
    try:
        return _dispatch(args)
    finally:
        sys.stdin = real


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return _dispatch(args)


if __name__ == "__main__":
    sys.exit(main())
