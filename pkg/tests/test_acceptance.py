"""Acceptance criteria 1-7. Each test prints one PASS/FAIL line, visible without -s.

Also runnable directly: ``python3 tests/test_acceptance.py``.
"""
import json
import os
import random
import subprocess
import sys
import time
from itertools import combinations

import pytest

from pshelly import coloring, oracle, suite
from pshelly.core import canonicalize, covers, hits, pairs_covered, pairwise_intersecting
from pshelly.generators import (
    PointSet,
    gen_all_subsets_minus_one,
    gen_disjoint_blocks,
    gen_h0,
    gen_halfplane,
    gen_k4,
    hull_boundary,
    random_point_set,
)
from pshelly.helly import MUTATE_ENV, DeltaHypergraph

SEEDS = range(1000)
_results: dict[int, tuple[bool, str]] = {}


def report(num: int, title: str, ok: bool, detail: str, capsys=None) -> None:
    line = f"ACCEPTANCE {num} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    _results[num] = (ok, line)
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)


@pytest.fixture(scope="module")
def suite_run():
    return suite.run_suite(SEEDS, max_n=10, max_m=12, fixtures=True)


# ---------------------------------------------------------------- 1


def check_theorem_bounds(rep: suite.SuiteReport) -> tuple[bool, str]:
    problems = []
    if rep.instances < 1000:
        problems.append(f"only {rep.instances} instances")
    if rep.families["halfplane"] < 200:
        problems.append(f"halfplane={rep.families['halfplane']}")
    if rep.families["wiring"] < 20:
        problems.append(f"wiring={rep.families['wiring']}")
    wiring_lines = [suite.base_instance(s)[2]["wiring"]["m"] for s in SEEDS if suite.base_instance(s)[0] == "wiring"]
    if max(wiring_lines) > 6:
        problems.append("wiring instance with more than 6 lines")
    for name, bound in suite.BOUNDS.items():
        if rep.runs[name] == 0:
            problems.append(f"{name} never ran")
        if rep.max_cert.get(name, 0) > bound or rep.max_oracle.get(name, 0) > bound:
            problems.append(f"{name} exceeds {bound}")
    if rep.violations:
        problems.append(f"{len(rep.violations)} violations, first {rep.violations[0].check}: {rep.violations[0].message}")
    if rep.seconds >= 300:
        problems.append(f"runtime {rep.seconds:.0f}s")
    runs = sum(rep.runs[n] for n in suite.BOUNDS)
    detail = (
        f"{rep.instances} instances ({rep.families['halfplane']} halfplane, {rep.families['wiring']} wiring), "
        f"{runs} theorem runs, max cert/oracle "
        + " ".join(f"{n}={rep.max_cert.get(n, 0)}/{rep.max_oracle.get(n, 0)}" for n in suite.BOUNDS)
        + f", {rep.seconds:.1f}s"
    )
    return not problems, "; ".join(problems) or detail


def test_1_theorem_bound_suite(suite_run, capsys):
    ok, detail = check_theorem_bounds(suite_run)
    report(1, "theorem-bound suite", ok, detail, capsys)
    assert ok, detail


# ---------------------------------------------------------------- 2


def check_tightness() -> tuple[bool, str]:
    budget = oracle.OracleBudget(max_n=16, max_m=40, max_subset_size=6)
    facts = []
    for k in (2, 3):
        h = gen_h0(k)
        facts.append((f"H0({k}) pairwise", pairwise_intersecting(h), True))
        facts.append((f"H0({k}) pairs covered", pairs_covered(h), True))
        facts.append((f"H0({k}) min hit", len(oracle.min_hitting_set(h, budget)), 3))
        facts.append((f"H0({k}) min cover", len(oracle.min_cover(h, budget)), 3))
        facts.append((f"H0({k}) bnb hit", oracle.min_hitting_size_bnb(h), 3))
    for l in (3, 4, 5):
        h = gen_all_subsets_minus_one(l)
        masks = h.masks()
        wise = all(
            (lambda acc: acc != 0)(_and(masks[i] for i in group))
            for group in combinations(range(h.m), l - 1)
        )
        facts.append((f"minus-one({l}) {l - 1}-wise", wise, True))
        facts.append((f"minus-one({l}) min hit", len(oracle.min_hitting_set(h, budget)), 2))
    for k in (1, 2, 3, 4):
        h = gen_disjoint_blocks([2] * (k + 1))
        facts.append((f"{k + 1} blocks min hit", len(oracle.min_hitting_set(h, budget)), k + 1))
    bad = [f"{name}={got} (want {want})" for name, got, want in facts if got != want]
    return not bad, "; ".join(bad) or f"{len(facts)} exact values match (H0 hit=cover=3, minus-one hit=2, k+1 blocks hit=k+1)"


def _and(values):
    acc = -1
    for v in values:
        acc &= v
    return acc


def test_2_tightness(capsys):
    ok, detail = check_tightness()
    report(2, "tightness", ok, detail, capsys)
    assert ok, detail


# ---------------------------------------------------------------- 3


def _non_crossing(graph) -> bool:
    pairs = sorted(graph.cross_edges)
    for (v1, w1), (v2, w2) in combinations(pairs, 2):
        if (v1 < v2 and w1 < w2) or (v2 < v1 and w2 < w1):
            return False
    return True


def check_colorings(rep: suite.SuiteReport) -> tuple[bool, str]:
    problems = []
    for name in ("color_aba_3", "color_pshp_4", "color_dual_pshp_3"):
        if rep.runs[name] == 0:
            problems.append(f"{name} never ran")
        bad = [v for v in rep.violations if v.check == name]
        if bad:
            problems.append(f"{name}: {bad[0].message}")
    k3 = canonicalize([[0, 1], [1, 2], [0, 2]], 3)
    chi_k4 = oracle.chromatic_number(gen_k4().base)
    chi_k3 = oracle.chromatic_number(k3)
    if chi_k4 != 4:
        problems.append(f"chi(K4)={chi_k4}")
    if chi_k3 != 3:
        problems.append(f"chi(K3)={chi_k3}")
    # dual instances, rechecked directly: degeneracy, non-crossing cross edges, properness
    duals = 0
    for seed in SEEDS:
        family, obj, _ = suite.base_instance(seed)
        if family != "hemi":
            continue
        f, x = obj
        rng = random.Random(seed)
        for _ in range(3):
            idx = [i for i in range(f.m) if rng.random() < 0.7]
            d = DeltaHypergraph.build(f.n, [f.edges[i] for i in idx], x, ["straight"] * len(idx))
            graph, _ = coloring.dual_aux_graph(d)
            k, _ = oracle.degeneracy(graph.vertices, graph.edges)
            duals += 1
            if k > 2:
                problems.append(f"seed {seed}: degeneracy {k}")
            if not _non_crossing(graph):
                problems.append(f"seed {seed}: crossing cross edges")
            if not coloring.is_proper(d.derived, coloring.color_dual_pshp_3(d)):
                problems.append(f"seed {seed}: improper dual coloring")
    if rep.lemma_checks["aux_degeneracy"] == 0:
        problems.append("suite never checked AuxGraph degeneracy")
    detail = (
        f"proper on {rep.runs['color_aba_3']}/{rep.runs['color_pshp_4']}/{rep.runs['color_dual_pshp_3']} "
        f"aba/pshp/dual runs, {duals} extra dual instances degeneracy<=2 and non-crossing, chi(K4)=4, chi(K3)=3"
    )
    return not problems, "; ".join(problems[:5]) or detail


def test_3_coloring_suite(suite_run, capsys):
    ok, detail = check_colorings(suite_run)
    report(3, "coloring suite", ok, detail, capsys)
    assert ok, detail


# ---------------------------------------------------------------- 4


def check_structure(rep: suite.SuiteReport) -> tuple[bool, str]:
    bad = [v for v in rep.violations if v.check.startswith("lemma:")]
    checked = rep.lemma_checks["structure"]
    problems = [f"{v.check}: {v.message}" for v in bad[:3]]
    if checked < 500:
        problems.append(f"only {checked} pseudohalfplane instances checked")
    return not problems, "; ".join(problems) or f"all lemmas hold on {checked} pseudohalfplane instances (each exhaustive over edges and vertices)"


def test_4_structure_suite(suite_run, capsys):
    ok, detail = check_structure(suite_run)
    report(4, "structure suite", ok, detail, capsys)
    assert ok, detail


# ---------------------------------------------------------------- 5


def check_geometry(count: int = 200) -> tuple[bool, str]:
    rng = random.Random(20240501)
    bad = []
    sizes = []
    for _ in range(count):
        ps = random_point_set(rng.randint(1, 10), rng)
        sizes.append(len(ps.points))
        upper, lower = hull_boundary(ps)
        prof = gen_halfplane(ps).profile
        if set(prof.topvertices) != upper or set(prof.bottomvertices) != lower:
            bad.append([[str(a), str(b)] for a, b in ps.points])
    return not bad, f"{len(bad)} mismatches, first {bad[0]}" if bad else f"{count} point sets (n={min(sizes)}..{max(sizes)}) match the exact hulls"


def test_5_geometry_cross_check(capsys):
    ok, detail = check_geometry()
    report(5, "geometry cross-check", ok, detail, capsys)
    assert ok, detail


# ---------------------------------------------------------------- 6


def check_recognizer() -> tuple[bool, str]:
    found = oracle.find_pshp_witness(gen_h0(2), search_orders=True)
    k4 = gen_k4().base
    dual = oracle.find_dual_pshp_witness(k4, search_orders=True)
    problems = []
    if found is None:
        problems.append("no witness for H0(2)")
    if dual is not None:
        problems.append(f"K4 dual witness found: {dual}")
    ok = not problems
    return ok, "; ".join(problems) or f"H0(2) witness order={found[0]} labels={found[1]}; K4 dual search exhausted 24 orders x 16 X, none"


def test_6_recognizer(capsys):
    ok, detail = check_recognizer()
    report(6, "recognizer", ok, detail, capsys)
    assert ok, detail


# ---------------------------------------------------------------- 7


def _cli(args, stdin="", mutate=None):
    env = dict(os.environ)
    env.pop(MUTATE_ENV, None)
    if mutate:
        env[MUTATE_ENV] = mutate
    return subprocess.run([sys.executable, "-m", "pshelly.cli", *args], input=stdin, capture_output=True, text=True, env=env)


def check_exit_contract() -> tuple[bool, str]:
    clean = _cli(["suite", "--seeds", "0..199", "--no-fixtures"])
    mutated = _cli(["suite", "--seeds", "0..199", "--no-fixtures"], mutate="h1-rank")
    problems = []
    if clean.returncode != 0:
        problems.append(f"clean suite exit {clean.returncode}")
    if mutated.returncode != 2:
        problems.append(f"mutated suite exit {mutated.returncode}")
        return False, "; ".join(problems)
    text = mutated.stdout[mutated.stdout.index("{"):]
    cert = json.loads(text.splitlines()[0])["certificate"]
    replay_bug = _cli(["verify"], text, mutate="h1-rank")
    replay_fixed = _cli(["verify"], text)
    if cert.get("type") != "contradiction":
        problems.append(f"certificate type {cert.get('type')}")
    if replay_bug.returncode != 2:
        problems.append(f"replay under mutation exit {replay_bug.returncode}")
    if replay_fixed.returncode != 0:
        problems.append(f"replay without mutation exit {replay_fixed.returncode}")
    return not problems, "; ".join(problems) or (
        f"mutated suite exit 2, certificate check={cert['check']} replay='{cert['replay']}' "
        f"exits 2 under the mutation and 0 without it"
    )


def test_7_exit_code_contract(capsys):
    ok, detail = check_exit_contract()
    report(7, "exit-code contract", ok, detail, capsys)
    assert ok, detail


if __name__ == "__main__":
    start = time.monotonic()
    rep = suite.run_suite(SEEDS, max_n=10, max_m=12, fixtures=True)
    report(1, "theorem-bound suite", *check_theorem_bounds(rep))
    report(2, "tightness", *check_tightness())
    report(3, "coloring suite", *check_colorings(rep))
    report(4, "structure suite", *check_structure(rep))
    report(5, "geometry cross-check", *check_geometry())
    report(6, "recognizer", *check_recognizer())
    report(7, "exit-code contract", *check_exit_contract())
    print(f"{sum(ok for ok, _ in _results.values())}/7 criteria pass in {time.monotonic() - start:.1f}s")
    sys.exit(0 if all(ok for ok, _ in _results.values()) else 1)
