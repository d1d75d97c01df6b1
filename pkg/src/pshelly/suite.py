"""Differential property suite over generated instances.

Each seed yields one base instance (random ABA-free, random pseudohalfplane,
halfplane on random points, wiring diagram, or random hemisphere/dual
family). From it the suite carves sub-instances that satisfy each theorem's
hypothesis, runs the algorithm, re-validates the certificate, and compares
with the exhaustive oracle. Structural lemmas about extremal vertices are
checked exhaustively on every pseudohalfplane instance.
"""
from __future__ import annotations

import random
import time
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from . import coloring, helly, oracle
from .core import (
    OrderedHypergraph,
    PreconditionError,
    TheoremContradiction,
    aba_pattern,
    canonicalize,
    complement_family,
    induced_subhypergraph,
    is_aba_free,
    to_mask,
)
from .generators import (
    PointSet,
    gen_from_wiring,
    gen_halfplane,
    gen_k4,
    gen_non_pappus,
    gen_random_abafree,
    gen_random_pshp,
    hull_boundary,
    random_point_set,
    random_wiring,
)
from .helly import DeltaHypergraph, Flag
from .instance_io import Instance, wrap
from .structure import (
    PshpHypergraph,
    Side,
    edge_circular_interval,
    is_extremal_by_singleton,
    mark_slots,
    nearest_unskippable,
    unskippable_vertices,
)

BOUNDS = {
    "hit_aba_2": 2,
    "hit_pshp_pairwise": 3,
    "hit_pshp_triplewise": 2,
    "cover_aba_2": 2,
    "cover_pshp_3wise": 2,
    "cover_pshp_pairwise": 3,
    "hit_hemi_pairwise": 4,
    "cover_hemi_pairwise": 4,
}

REPLAY = {
    "hit_aba_2": "hit --mode aba2",
    "hit_pshp_pairwise": "hit --mode pshp-pairwise",
    "hit_pshp_triplewise": "hit --mode pshp-triple",
    "cover_aba_2": "cover --mode aba2",
    "cover_pshp_3wise": "cover --mode pshp-triple",
    "cover_pshp_pairwise": "cover --mode pshp-pairwise",
    "hit_hemi_pairwise": "hit --mode hemi",
    "cover_hemi_pairwise": "cover --mode hemi",
    "color_aba_3": "color --mode aba3",
    "color_pshp_4": "color --mode pshp4",
    "color_dual_pshp_3": "color --mode dual3",
}

ORACLE_BUDGET = oracle.OracleBudget(max_n=40, max_m=400, max_subset_size=4, time_cap=30.0)

TRIES = 6  # random greedy orders per sub-instance; the hardest one is kept

FAMILIES = ("random-aba",) * 3 + ("random-pshp",) * 3 + ("halfplane",) * 2 + ("wiring", "hemi")


def replay_command(check: str) -> str:
    """CLI arguments that re-run a check on the instance it failed on."""
    if check.startswith("lemma:"):
        return "extremal --check"
    return REPLAY.get(check, "verify")


@dataclass
class Violation:
    check: str
    message: str
    instance: Instance
    contradiction: bool = True

    def certificate(self) -> dict:
        return {
            "type": "contradiction" if self.contradiction else "violation",
            "check": self.check,
            "message": self.message,
            "replay": replay_command(self.check),
        }

    def replayable(self) -> Instance:
        inst = self.instance
        return Instance(inst.kind, inst.obj, inst.points, dict(inst.meta), self.certificate(), inst.meta.get("seed"))


@dataclass
class SuiteReport:
    instances: int = 0
    families: Counter = field(default_factory=Counter)
    runs: Counter = field(default_factory=Counter)
    skipped: Counter = field(default_factory=Counter)
    oracle_skipped: Counter = field(default_factory=Counter)
    max_cert: dict = field(default_factory=dict)
    max_oracle: dict = field(default_factory=dict)
    lemma_checks: Counter = field(default_factory=Counter)
    violations: list[Violation] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "SuiteReport") -> None:
        self.instances += other.instances
        self.families.update(other.families)
        self.runs.update(other.runs)
        self.skipped.update(other.skipped)
        self.oracle_skipped.update(other.oracle_skipped)
        self.lemma_checks.update(other.lemma_checks)
        for mine, theirs in ((self.max_cert, other.max_cert), (self.max_oracle, other.max_oracle)):
            for k, v in theirs.items():
                mine[k] = max(mine.get(k, 0), v)
        self.violations.extend(other.violations)
        self.seconds += other.seconds

    def note(self, name: str, cert_size: int, oracle_size: int) -> None:
        self.runs[name] += 1
        self.max_cert[name] = max(self.max_cert.get(name, 0), cert_size)
        self.max_oracle[name] = max(self.max_oracle.get(name, 0), oracle_size)

    def lines(self) -> list[str]:
        out = [f"instances: {self.instances} ({', '.join(f'{k}={v}' for k, v in sorted(self.families.items()))})"]
        for name, bound in BOUNDS.items():
            out.append(
                f"{name:22s} runs={self.runs[name]:5d} max_cert={self.max_cert.get(name, '-')} "
                f"max_oracle={self.max_oracle.get(name, '-')} bound={bound} skipped={self.skipped[name]} "
                f"no_oracle={self.oracle_skipped[name]}"
            )
        for name in ("color_aba_3", "color_pshp_4", "color_dual_pshp_3"):
            out.append(f"{name:22s} runs={self.runs[name]:5d}")
        out.append("lemmas: " + ", ".join(f"{k}={v}" for k, v in sorted(self.lemma_checks.items())))
        out.append(f"violations: {len(self.violations)}  time: {self.seconds:.1f}s")
        return out


# ---------------------------------------------------------------- sub-families


def _greedy_intersecting(masks: list[int], order: list[int], k: int) -> list[int]:
    """Greedy maximal subfamily in which every k (or fewer) members share a vertex."""
    chosen: list[int] = []
    for i in order:
        e = masks[i]
        if not e:
            continue
        ok = all(e & masks[a] for a in chosen)
        if ok and k >= 3:
            ok = all(e & masks[a] & masks[b] for a, b in combinations(chosen, 2))
        if ok:
            chosen.append(i)
    return sorted(chosen)


def _covered(masks: list[int], n: int, k: int) -> bool:
    for tup in combinations(range(n), k):
        want = to_mask(tup)
        if not any(e & want == want for e in masks):
            return False
    return True


def _greedy_minimal_covering(masks: list[int], n: int, order: list[int], k: int) -> list[int] | None:
    """Drop members while every k vertices still share an edge; None if the pool fails."""
    keep = set(range(len(masks)))
    if not _covered(masks, n, k):
        return None
    for i in order:
        trial = keep - {i}
        if _covered([masks[j] for j in trial], n, k):
            keep = trial
    return sorted(keep)


def _shuffled(count: int, rng: random.Random) -> list[int]:
    order = list(range(count))
    rng.shuffle(order)
    return order


def _hardest(candidates: list[list[int]], masks: list[int], n: int, hitting: bool) -> list[int] | None:
    """Among candidate index sets, the one whose exact optimum is largest."""
    best, best_val = None, -1
    for idx in candidates:
        if idx is None or not idx or idx == best:
            continue
        h = canonicalize([[v for v in range(n) if masks[i] >> v & 1] for i in idx], n)
        budget = oracle.OracleBudget(ORACLE_BUDGET.max_n, ORACLE_BUDGET.max_m, 5, ORACLE_BUDGET.time_cap)
        try:
            val = len(oracle.min_hitting_set(h, budget) if hitting else oracle.min_cover(h, budget))
        except (oracle.BudgetError, PreconditionError):
            val = 99
        if val > best_val:
            best, best_val = idx, val
    return best


# ---------------------------------------------------------------- theorem runs


def _run_theorem(report: SuiteReport, name: str, func: Callable, arg, plain: OrderedHypergraph, inst: Instance, hitting: bool) -> None:
    bound = BOUNDS[name]
    try:
        cert = func(arg)
    except PreconditionError:
        report.skipped[name] += 1
        return
    except TheoremContradiction as exc:
        report.violations.append(Violation(name, str(exc), inst))
        return
    if not cert.validate(plain):
        report.violations.append(Violation(name, f"certificate {cert} does not validate", inst))
        return
    size = len(cert.vertices) if hitting else len(cert.edge_indices)
    budget = oracle.OracleBudget(ORACLE_BUDGET.max_n, ORACLE_BUDGET.max_m, bound, ORACLE_BUDGET.time_cap)
    try:
        budget.check_size(plain.n, plain.m)
    except oracle.BudgetError:
        report.oracle_skipped[name] += 1
        report.note(name, size, 0)
        return
    try:
        best = oracle.min_hitting_set(plain, budget) if hitting else oracle.min_cover(plain, budget)
    except oracle.BudgetError as exc:
        report.violations.append(Violation(name, f"oracle minimum exceeds bound {bound}: {exc}", inst))
        return
    if size < len(best):
        report.violations.append(Violation(name, f"certificate of size {size} beats oracle minimum {len(best)}", inst, False))
        return
    report.note(name, size, len(best))


def _aba_theorems(report: SuiteReport, f: OrderedHypergraph, rng: random.Random, meta: dict) -> None:
    masks = f.masks()
    idx = _hardest([_greedy_intersecting(masks, _shuffled(len(masks), rng), 2) for _ in range(TRIES)], masks, f.n, True)
    sub = canonicalize([f.edges[i] for i in idx or []], f.n)
    if sub.edges:
        _run_theorem(report, "hit_aba_2", helly.hit_aba_2, sub, sub, wrap(sub, meta=meta), True)

    # grow F with random compatible large edges until every pair is covered, then thin it out
    grown = list(masks)
    full = (1 << f.n) - 1
    for _ in range(60 * f.n):
        if f.n >= 2 and _covered(grown, f.n, 2):
            break
        cand = sum(1 << v for v in range(f.n) if rng.random() < 0.7)
        if cand in grown or cand == full:
            continue
        if all(not aba_pattern(cand, o) and not aba_pattern(o, cand) for o in grown):
            grown.append(cand)
    if f.n >= 2:
        keep = _hardest([_greedy_minimal_covering(grown, f.n, _shuffled(len(grown), rng), 2) for _ in range(TRIES)], grown, f.n, False)
        if keep is not None:
            cov = canonicalize([[v for v in range(f.n) if grown[i] >> v & 1] for i in keep], f.n)
            _run_theorem(report, "cover_aba_2", helly.cover_aba_2, cov, cov, wrap(cov, meta=meta), False)

    try:
        col = coloring.color_aba_3(f)
    except TheoremContradiction as exc:
        report.violations.append(Violation("color_aba_3", str(exc), wrap(f, meta=meta)))
        return
    report.runs["color_aba_3"] += 1
    if not coloring.is_proper(f, col):
        report.violations.append(Violation("color_aba_3", f"improper coloring {col.color}", wrap(f, meta=meta)))
    if f.n <= 10:
        chi = oracle.chromatic_number(f, cap=4, budget=ORACLE_BUDGET)
        if chi is None or chi > 3:
            report.violations.append(Violation("color_aba_3", f"oracle chromatic number {chi} > 3", wrap(f, meta=meta)))


def _pshp_theorems(report: SuiteReport, p: PshpHypergraph, rng: random.Random, meta: dict) -> None:
    masks = p.base.masks()
    for name, func, k in (
        ("hit_pshp_pairwise", helly.hit_pshp_pairwise, 2),
        ("hit_pshp_triplewise", helly.hit_pshp_triplewise, 3),
    ):
        idx = _hardest([_greedy_intersecting(masks, _shuffled(len(masks), rng), k) for _ in range(TRIES)], masks, p.n, True)
        if idx:
            sub = p.subfamily(idx)
            _run_theorem(report, name, func, sub, sub.base, wrap(sub, meta=meta), True)

    full = set(range(p.n))
    pool = PshpHypergraph.from_sides(p.n, p.witness.edges, [sorted(full - set(e)) for e in p.witness.edges])
    pool_masks = pool.base.masks()
    for name, func, k in (
        ("cover_pshp_3wise", helly.cover_pshp_3wise, 3),
        ("cover_pshp_pairwise", helly.cover_pshp_pairwise, 2),
    ):
        if p.n < k:
            continue
        for source, source_masks in ((p, masks), (pool, pool_masks)):
            keep = _hardest(
                [_greedy_minimal_covering(source_masks, p.n, _shuffled(len(source_masks), rng), k) for _ in range(TRIES)],
                source_masks, p.n, False,
            )
            if keep is None:
                continue
            sub = source.subfamily(keep)
            _run_theorem(report, name, func, sub, sub.base, wrap(sub, meta=meta), False)
            # the unthinned family too, so that the maximal-edge step sees large inputs
            if source is p:
                _run_theorem(report, name, func, p, p.base, wrap(p, meta=meta), False)
            break

    try:
        col = coloring.color_pshp_4(p)
    except TheoremContradiction as exc:
        report.violations.append(Violation("color_pshp_4", str(exc), wrap(p, meta=meta)))
        return
    report.runs["color_pshp_4"] += 1
    if p.n <= 10:
        chi = oracle.chromatic_number(p.base, cap=5, budget=ORACLE_BUDGET)
        if chi is None or chi > 4:
            report.violations.append(Violation("color_pshp_4", f"oracle chromatic number {chi} > 4", wrap(p, meta=meta)))


def _delta_theorems(report: SuiteReport, f: OrderedHypergraph, x: frozenset[int], rng: random.Random, meta: dict) -> None:
    n = f.n
    pool = [(e, flag) for e in f.edges for flag in (Flag.STRAIGHT, Flag.COMPLEMENTED)]
    full = set(range(n))
    derived = [to_mask((set(e) if flag is Flag.STRAIGHT else full - set(e)) ^ x) for e, flag in pool]

    def build(idx):
        return DeltaHypergraph.build(n, [pool[i][0] for i in idx], x, [pool[i][1] for i in idx])

    idx = _hardest([_greedy_intersecting(derived, _shuffled(len(derived), rng), 2) for _ in range(TRIES)], derived, n, True)
    if idx:
        d = build(idx)
        _run_theorem(report, "hit_hemi_pairwise", helly.hit_hemi_pairwise, d, d.derived, wrap(d, meta=meta), True)
    if n >= 2:
        keep = _hardest([_greedy_minimal_covering(derived, n, _shuffled(len(derived), rng), 2) for _ in range(TRIES)], derived, n, False)
        if keep is not None:
            d = build(keep)
            _run_theorem(report, "cover_hemi_pairwise", helly.cover_hemi_pairwise, d, d.derived, wrap(d, meta=meta), False)

    dual = DeltaHypergraph.build(n, f.edges, x, [Flag.STRAIGHT] * len(f.edges))
    inst = wrap(dual, meta=meta)
    try:
        graph, _ = coloring.dual_aux_graph(dual)
        k, _ = oracle.degeneracy(graph.vertices, graph.edges)
        report.lemma_checks["aux_degeneracy"] += 1
        if k > 2:
            report.violations.append(Violation("color_dual_pshp_3", f"auxiliary graph degeneracy {k}", inst))
            return
        col = coloring.color_dual_pshp_3(dual)
    except TheoremContradiction as exc:
        report.violations.append(Violation("color_dual_pshp_3", str(exc), inst))
        return
    report.runs["color_dual_pshp_3"] += 1
    if not coloring.is_proper(dual.derived, col):
        report.violations.append(Violation("color_dual_pshp_3", f"improper coloring {col.color}", inst))
    if n <= 10:
        chi = oracle.chromatic_number(dual.derived, cap=4, budget=ORACLE_BUDGET)
        if chi is None or chi > 3:
            report.violations.append(Violation("color_dual_pshp_3", f"oracle chromatic number {chi} > 3", inst))


# ---------------------------------------------------------------- structure


def structure_violations(p: PshpHypergraph) -> list[tuple[str, str]]:
    """Check the extremal-vertex lemmas exhaustively; returns (lemma, detail) pairs."""
    bad: list[tuple[str, str]] = []
    n = p.n
    prof = p.profile
    tops, bottoms = prof.topvertices, prof.bottomvertices
    top_set, bottom_set = set(tops), set(bottoms)
    extremal = prof.extremal_set
    c_mask = to_mask(extremal)
    full = (1 << n) - 1
    masks = p.base.masks()

    if n >= 1 and not (tops[0] == bottoms[0] == 0 and tops[-1] == bottoms[-1] == n - 1):
        bad.append(("endpoints", f"T={tops} B={bottoms}"))
    if n >= 3 and len(extremal) < 3:
        bad.append(("three_extremal", f"C={sorted(extremal)}"))

    for v in range(n):
        for side, members in ((Side.TOP, top_set), (Side.BOTTOM, bottom_set)):
            if is_extremal_by_singleton(p, v, side) != (v in members):
                bad.append(("singleton", f"vertex {v} side {side.value}"))

    slots = prof.slot_vertices
    total = len(slots)
    for e, m, side in zip(p.edges, masks, p.sides):
        if m and not m & c_mask:
            bad.append(("contains_extremal", f"edge {list(e)}"))
        if not edge_circular_interval(prof, e).is_interval:
            bad.append(("interval", f"edge {list(e)} slots {slots}"))
        if m & c_mask == c_mask and m != full:
            bad.append(("every_extremal", f"edge {list(e)}"))
        roles = []
        if side.is_top:
            roles.append((tops, bottoms, p.witness))
        if side.is_bottom:
            roles.append((bottoms, tops, complement_family(p.witness)))
        for own, other, family in roles:
            # same-side hull vertices inside an edge form a run of the hull
            inside = [i for i, v in enumerate(own) if m >> v & 1]
            if inside and inside != list(range(inside[0], inside[-1] + 1)):
                bad.append(("same_side_run", f"edge {list(e)}"))
            for x in other:
                if m >> x & 1:
                    lower = to_mask(range(x))
                    upper = full & ~to_mask(range(x + 1))
                    if m & lower != lower and m & upper != upper:
                        bad.append(("opposite_side_halfline", f"edge {list(e)} vertex {x}"))
            for a, b in zip(other, other[1:]):
                if m >> a & 1 and m >> b & 1:
                    between = to_mask(range(a + 1, b))
                    if m & between != between:
                        bad.append(("consecutive", f"edge {list(e)} pair {(a, b)}"))
            unsk = unskippable_vertices(family)
            for v in range(n):
                if m >> v & 1 and v not in unsk:
                    before, after = nearest_unskippable(family, v)
                    if not (m >> before & 1 or m >> after & 1):
                        bad.append(("nearest_unskippable", f"edge {list(e)} vertex {v}"))

    # two-arc cover and disjointness, over all ordered slot pairs
    slot_masks = [1 << v for v in slots]
    if total >= 2:
        for i in range(total):
            for j in range(total):
                if i == j:
                    continue
                arc1 = arc2 = 0
                k = i
                while True:
                    arc1 |= slot_masks[k]
                    if k == j:
                        break
                    k = (k + 1) % total
                k = j
                while True:
                    arc2 |= slot_masks[k]
                    if k == i:
                        break
                    k = (k + 1) % total
                in1 = [m for m in masks if m & arc1 == arc1]
                in2 = [m for m in masks if m & arc2 == arc2]
                if in1 and in2:
                    comps = 0
                    for m in in1:
                        comps |= full & ~m
                    common = full
                    for m in in2:
                        common &= m
                    if comps & ~common:
                        bad.append(("two_arc_cover", f"slots {(i, j)}"))
                if (j - i) % total in (1, total - 1) or slots[i] == slots[j]:
                    continue
                pq = slot_masks[i] | slot_masks[j]
                open1, open2 = arc1 & ~arc2 & ~pq, arc2 & ~arc1 & ~pq
                inside1 = inside2 = 0
                for m in masks:
                    trace = m & c_mask
                    if trace and trace & ~open1 == 0:
                        inside1 |= m
                    if trace and trace & ~open2 == 0:
                        inside2 |= m
                if inside1 & inside2:
                    bad.append(("two_arc_disjoint", f"slots {(i, j)}"))

    for family in (p.witness, complement_family(p.witness)):
        unsk = unskippable_vertices(family)
        for w in range(n):
            rest = [v for v in range(n) if v != w]
            sub, remap = induced_subhypergraph(family, rest)
            sub_unsk = unskippable_vertices(sub)
            for v in rest:
                if remap[v] in sub_unsk and v not in unsk and w not in unsk:
                    bad.append(("vertex_deletion", f"v={v} w={w}"))
    return bad


def _structure(report: SuiteReport, p: PshpHypergraph, inst: Instance) -> None:
    report.lemma_checks["structure"] += 1
    for lemma, detail in structure_violations(p):
        report.violations.append(Violation(f"lemma:{lemma}", detail, inst))


# ---------------------------------------------------------------- driver


def base_instance(seed: int, max_n: int = 10, max_m: int = 12) -> tuple[str, object, dict]:
    """The generated instance for one seed: (family, object, meta)."""
    family = FAMILIES[seed % len(FAMILIES)]
    rng = random.Random(seed * 7919 + 17)
    meta = {"seed": seed, "family": family}
    if family == "random-aba":
        f, short = gen_random_abafree(rng.randint(3, max_n), rng.randint(1, max_m), seed)
        meta["short"] = short
        return family, f, meta
    if family == "random-pshp":
        p, short = gen_random_pshp(rng.randint(3, max_n), rng.randint(1, max_m), seed)
        meta["short"] = short
        return family, p, meta
    if family == "halfplane":
        ps = random_point_set(rng.randint(3, min(8, max_n)), rng)
        meta["points"] = [[str(x), str(y)] for x, y in ps.points]
        return family, gen_halfplane(ps), meta
    if family == "wiring":
        w = random_wiring(rng.randint(2, 6), rng, loose=rng.choice((0.0, 0.15)))
        meta["wiring"] = {"m": w.m, "crossings": list(w.crossings), "sides": list(w.sides)}
        return family, gen_from_wiring(w), meta
    f, short = gen_random_abafree(rng.randint(3, max_n), rng.randint(1, max_m), seed)
    x = frozenset(v for v in range(f.n) if rng.random() < 0.5)
    meta["short"] = short
    meta["X"] = sorted(x)
    return family, (f, x), meta


def check_seed(seed: int, max_n: int = 10, max_m: int = 12, report: SuiteReport | None = None) -> SuiteReport:
    report = report or SuiteReport()
    family, obj, meta = base_instance(seed, max_n, max_m)
    rng = random.Random(seed)
    report.instances += 1
    report.families[family] += 1
    if family == "random-aba":
        if not is_aba_free(obj):
            report.violations.append(Violation("generator", "random ABA-free sample is not ABA-free", wrap(obj, meta=meta)))
            return report
        _aba_theorems(report, obj, rng, meta)
    elif family == "hemi":
        f, x = obj
        _delta_theorems(report, f, x, rng, meta)
        _aba_theorems(report, f, rng, meta)
    else:
        points = None
        if family == "halfplane":
            ps = PointSet.of(meta["points"])
            points = list(ps.points)
            upper, lower = hull_boundary(ps)
            prof = obj.profile
            report.lemma_checks["hull_match"] += 1
            if set(prof.topvertices) != upper or set(prof.bottomvertices) != lower:
                report.violations.append(Violation("lemma:hull_match", f"T={prof.topvertices} B={prof.bottomvertices} hull={sorted(upper)},{sorted(lower)}", Instance("pshp", obj, points, meta)))
        inst = Instance("pshp", obj, points, meta)
        _structure(report, obj, inst)
        _pshp_theorems(report, obj, rng, meta)
        _aba_theorems(report, obj.witness, rng, meta)
    return report


def check_fixtures(report: SuiteReport | None = None) -> SuiteReport:
    """Fixed stress inputs: the non-Pappus arrangement (both resolutions, two
    side patterns) and the K4 pair family."""
    report = report or SuiteReport()
    rng = random.Random(0)
    mixed = ("above", "below") * 4 + ("above",)
    for flip in (False, True):
        for sides in (None, mixed):
            p = gen_non_pappus(sides, flip)
            meta = {"family": "non-pappus", "flip": flip, "sides": list(sides or ())}
            report.instances += 1
            report.families["non-pappus"] += 1
            _structure(report, p, Instance("pshp", p, None, meta))
            _pshp_theorems(report, p, rng, meta)
    k4 = gen_k4()
    report.instances += 1
    report.families["k4"] += 1
    _structure(report, k4, Instance("pshp", k4, None, {"family": "k4"}))
    _pshp_theorems(report, k4, rng, {"family": "k4"})
    return report


def run_suite(seeds: range, max_n: int = 10, max_m: int = 12, stop_on_first: bool = False, fixtures: bool = False) -> SuiteReport:
    report = SuiteReport()
    start = time.monotonic()
    if fixtures:
        check_fixtures(report)
    for seed in seeds:
        check_seed(seed, max_n, max_m, report)
        if stop_on_first and report.violations:
            break
    report.seconds = time.monotonic() - start
    return report


def lemma_summary(report: SuiteReport) -> dict[str, int]:
    counts: dict[str, int] = defaultdict(int)
    for v in report.violations:
        counts[v.check] += 1
    return dict(counts)
