from itertools import combinations

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from pshelly import helly, oracle
from pshelly.core import PreconditionError, TheoremContradiction, canonicalize
from pshelly.generators import PointSet, gen_h0, gen_halfplane
from pshelly.helly import DeltaHypergraph, Flag
from pshelly.structure import PshpHypergraph
from pshelly.suite import _greedy_intersecting, _greedy_minimal_covering

from strategies import aba_free_families, delta_families, pshp_families

BIG = oracle.OracleBudget(max_n=12, max_m=200, max_subset_size=5)


def tops(n, edges):
    return PshpHypergraph.from_sides(n, edges, [])


def restrict(p, keep_edges):
    idx = [i for i, e in enumerate(p.edges) if list(e) in keep_edges]
    return p.subfamily(idx)


# ---------------------------------------------------------------- hit_aba_2


def test_hit_aba_2_examples():
    assert helly.hit_aba_2(canonicalize([[0, 1], [1, 2], [0, 2]], 3)).vertices == (0, 2)
    # dropping the smallest redundant vertex first leaves the largest one
    assert helly.hit_aba_2(canonicalize([[0, 1, 2]], 3)).vertices == (2,)
    assert helly.hit_aba_2(canonicalize([[0, 1, 2], [1, 2, 3], [2, 3, 4]], 5)).vertices == (2,)


def test_hit_aba_2_preconditions():
    with pytest.raises(PreconditionError):
        helly.hit_aba_2(canonicalize([[0, 2], [1]], 3))  # not ABA-free
    with pytest.raises(PreconditionError):
        helly.hit_aba_2(canonicalize([[0], [1]], 2))  # disjoint
    with pytest.raises(PreconditionError):
        helly.hit_aba_2(canonicalize([[]], 2))


# ---------------------------------------------------------------- pseudohalfplane hitting


def test_hit_pshp_pairwise_four_points():
    full = gen_halfplane(PointSet.of([(0, 0), (1, 3), (2, 1), (4, 0)]))
    # {0,1,3} is not cut off by any halfplane: point 2 lies inside their triangle
    assert (0, 1, 3) not in full.edges
    p = restrict(full, [[0, 1], [1, 3]])
    assert len(p.edges) == 2
    assert helly.hit_pshp_pairwise(p).vertices == (1,)
    assert helly.hit_pshp_pairwise(tops(4, [[0, 1], [1, 3], [0, 1, 3]])).vertices == (1,)


def test_hit_pshp_pairwise_full_edge():
    assert len(helly.hit_pshp_pairwise(tops(4, [[0, 1, 2, 3]])).vertices) == 1


def test_hit_pshp_pairwise_tight_on_h0():
    h0 = gen_h0(2)
    order, labels = oracle.find_pshp_witness(h0, search_orders=True)
    h = oracle.relabel(h0, order)
    top = [e for e, lab in zip(h.edges, labels) if lab == "top"]
    bottom = [e for e, lab in zip(h.edges, labels) if lab == "bottom"]
    p = PshpHypergraph.from_sides(h.n, top, bottom)
    assert len(helly.hit_pshp_pairwise(p).vertices) == 3


def test_hit_pshp_triplewise_examples():
    assert len(helly.hit_pshp_triplewise(tops(3, [[0, 1, 2]])).vertices) == 1
    with pytest.raises(PreconditionError):
        helly.hit_pshp_triplewise(tops(3, [[0, 1], [1, 2], [0, 2], [0, 1, 2]]))
    assert helly.hit_pshp_triplewise(tops(3, [[0, 1], [0, 2], [0, 1, 2]])).vertices == (0,)


def test_minimal_hitting_subset_drops_smallest_first():
    h = canonicalize([[0, 1], [1, 2]], 3)
    assert helly.minimal_hitting_subset(h, [0, 1, 2]) == [1]
    with pytest.raises(TheoremContradiction):
        helly.minimal_hitting_subset(h, [0])


# ---------------------------------------------------------------- covers


def test_cover_aba_2_examples():
    assert helly.cover_aba_2(canonicalize([[0, 1, 2]], 3)).edge_indices == (0,)
    with pytest.raises(PreconditionError):
        helly.cover_aba_2(canonicalize([[0, 1], [1, 2]], 3))
    assert helly.cover_aba_2(canonicalize([[0, 1], [1, 2], [0, 2]], 3)).edge_indices == (0, 1)


def test_cover_pshp_3wise_examples():
    assert helly.cover_pshp_3wise(tops(3, [[0, 1, 2]])).edge_indices == (0,)
    p = tops(4, [[0, 1, 2, 3], [0, 1]])
    cert = helly.cover_pshp_3wise(p)
    assert len(cert.edge_indices) == 1 and p.edges[cert.edge_indices[0]] == (0, 1, 2, 3)


def test_cover_pshp_3wise_convex_points():
    full = gen_halfplane(PointSet.of([(0, 0), (1, 2), (2, 2), (3, 0)]))
    small = full.subfamily([i for i, e in enumerate(full.edges) if len(e) <= 3])
    cert = helly.cover_pshp_3wise(small)
    assert len(cert.edge_indices) == 2
    union = set().union(*(small.edges[i] for i in cert.edge_indices))
    assert union == {0, 1, 2, 3}


def test_cover_pshp_3wise_precondition():
    with pytest.raises(PreconditionError):
        helly.cover_pshp_3wise(tops(3, [[0, 1], [1, 2]]))
    with pytest.raises(PreconditionError):
        helly.cover_pshp_3wise(tops(2, [[0, 1]]))


def test_cover_pshp_pairwise_examples():
    assert helly.cover_pshp_pairwise(tops(3, [[0, 1, 2]])).edge_indices == (0,)
    assert len(helly.cover_pshp_pairwise(tops(3, [[0, 1], [1, 2], [0, 2]])).edge_indices) == 2
    with pytest.raises(PreconditionError):
        helly.cover_pshp_pairwise(tops(6, [[0, 1], [2, 3], [4, 5]]))


# ---------------------------------------------------------------- hemisphere


def test_delta_derived_edges():
    d = DeltaHypergraph.build(3, [[0, 1]], [2], ["straight"])
    assert d.derived.as_lists() == [[0, 1, 2]]
    assert helly.cover_hemi_pairwise(d).edge_indices == (0,)


def test_delta_complemented_pair_fails_cover():
    d = DeltaHypergraph.build(3, [[0, 1], [2]], [], ["straight", "complemented"])
    assert d.derived.as_lists() == [[0, 1]]
    with pytest.raises(PreconditionError):
        helly.cover_hemi_pairwise(d)


def test_hemi_hit_on_four_subsets():
    f = canonicalize(combinations(range(5), 4), 5)
    d = DeltaHypergraph.build(5, f.edges, [], ["straight"] * f.m)
    assert helly.hit_hemi_pairwise(d).vertices == (0, 1)


def test_delta_build_merges_flags():
    d = DeltaHypergraph.build(3, [[0, 1], [1, 0]], [], ["straight", "complemented"])
    assert d.flags == (Flag.BOTH,)
    assert d.derived.as_lists() == [[0, 1], [2]]
    assert not d.is_dual_pshp


# ---------------------------------------------------------------- properties


def _check_hit(cert, h, bound):
    assert cert.validate(h)
    assert len(cert.vertices) <= bound
    assert len(cert.vertices) >= len(oracle.min_hitting_set(h, BIG))


def _check_cover(cert, h, bound):
    assert cert.validate(h)
    assert len(cert.edge_indices) <= bound
    assert len(cert.edge_indices) >= len(oracle.min_cover(h, BIG))


PROP = settings(max_examples=120, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@PROP
@given(aba_free_families(min_n=2, max_n=8, max_m=10), st.randoms(use_true_random=False))
def test_aba_theorems_on_subfamilies(f, rnd):
    masks = f.masks()
    order = list(range(f.m))
    rnd.shuffle(order)
    sub = canonicalize([f.edges[i] for i in _greedy_intersecting(masks, order, 2)], f.n)
    if sub.m:
        _check_hit(helly.hit_aba_2(sub), sub, 2)
    if f.n >= 2:
        keep = _greedy_minimal_covering(masks + [(1 << f.n) - 1], f.n, order, 2)
        cov = canonicalize([[v for v in range(f.n) if (masks + [(1 << f.n) - 1])[i] >> v & 1] for i in keep], f.n)
        _check_cover(helly.cover_aba_2(cov), cov, 2)


@PROP
@given(pshp_families(min_n=3, max_n=8, max_m=10), st.randoms(use_true_random=False))
def test_pshp_theorems_on_subfamilies(p, rnd):
    masks = p.base.masks()
    order = list(range(len(masks)))
    rnd.shuffle(order)
    for func, k, bound in ((helly.hit_pshp_pairwise, 2, 3), (helly.hit_pshp_triplewise, 3, 2)):
        idx = _greedy_intersecting(masks, order, k)
        if idx:
            sub = p.subfamily(idx)
            _check_hit(func(sub), sub.base, bound)
    full = set(range(p.n))
    pool = PshpHypergraph.from_sides(p.n, p.witness.edges, [sorted(full - set(e)) for e in p.witness.edges])
    pmasks = pool.base.masks()
    porder = list(range(len(pmasks)))
    rnd.shuffle(porder)
    for func, k, bound in ((helly.cover_pshp_3wise, 3, 2), (helly.cover_pshp_pairwise, 2, 3)):
        keep = _greedy_minimal_covering(pmasks, p.n, porder, k)
        if keep is not None:
            sub = pool.subfamily(keep)
            _check_cover(func(sub), sub.base, bound)


@PROP
@given(delta_families(min_n=2, max_n=7, max_m=6), st.randoms(use_true_random=False))
def test_hemi_theorems(d, rnd):
    h = d.derived
    masks = h.masks()
    order = list(range(len(masks)))
    rnd.shuffle(order)
    idx = _greedy_intersecting(masks, order, 2)
    if idx:
        keep = [h.edges[i] for i in idx]
        # rebuild a DeltaHypergraph whose derived family is exactly the kept edges
        pairs = [(e, fl) for e, fl in zip(d.f.edges, d.flags)]
        chosen_f, chosen_flags = [], []
        full = set(range(d.n))
        for e, fl in pairs:
            for kind in (Flag.STRAIGHT, Flag.COMPLEMENTED):
                if fl is not Flag.BOTH and fl is not kind:
                    continue
                base = set(e) if kind is Flag.STRAIGHT else full - set(e)
                if tuple(sorted(base ^ d.x)) in keep:
                    chosen_f.append(e)
                    chosen_flags.append(kind)
        sub = DeltaHypergraph.build(d.n, chosen_f, d.x, chosen_flags)
        assert set(sub.derived.edges) == set(keep)
        _check_hit(helly.hit_hemi_pairwise(sub), sub.derived, 4)
    if d.n >= 2 and h.m and not any(
        not any(e & (1 << u) and e & (1 << v) for e in masks) for u, v in combinations(range(d.n), 2)
    ):
        _check_cover(helly.cover_hemi_pairwise(d), h, 4)


# ---------------------------------------------------------------- mutations


def _mutation_instance():
    # random-pshp suite seed 3, where the lowest-index H1 misses the maximal arc
    return PshpHypergraph.from_sides(
        4, [[0], [0, 2], [3]], [[0], [0, 1, 2, 3], [1, 2], [1, 3], [2, 3], [3]]
    )


def test_h1_rank_mutation_is_caught(monkeypatch):
    p = _mutation_instance()
    assert len(helly.cover_pshp_3wise(p).edge_indices) <= 2
    monkeypatch.setenv(helly.MUTATE_ENV, "h1-rank")
    with pytest.raises(TheoremContradiction):
        helly.cover_pshp_3wise(p)


def test_aba_pool_mutation_is_caught(monkeypatch):
    f = canonicalize([[0, 1], [0, 1, 2], [0, 2], [0, 3], [1, 2, 3]], 4)
    assert len(helly.hit_aba_2(f).vertices) <= 2
    monkeypatch.setenv(helly.MUTATE_ENV, "aba-pool")
    try:
        cert = helly.hit_aba_2(f)
    except TheoremContradiction:
        return
    pytest.fail(f"mutation went unnoticed: {cert}")
