"""Discrete Helly-type hitting sets and covers.

Each routine checks the hypothesis of its theorem, produces a certificate and
validates it before returning. A certificate larger than the proven bound is
reported as :class:`TheoremContradiction`; this can only be a bug.

Constructive routines follow the existence proofs (minimal hitting sets among
unskippable or extremal vertices, the maximal-edge argument for two-edge
covers). Where the existence proof is by contradiction or routes through a
cited result, the routine enumerates candidates up to the bound instead.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .core import (
    OrderedHypergraph,
    PreconditionError,
    TheoremContradiction,
    ValidationError,
    canonicalize,
    disjoint_pair,
    disjoint_triple,
    is_aba_free,
    to_mask,
    uncovered_pair,
    uncovered_triple,
)
from .structure import PshpHypergraph, edge_circular_interval, unskippable_vertices

MUTATE_ENV = "PSHELLY_MUTATE"


def active_mutation() -> str | None:
    """Name of a deliberately injected bug, for exercising the suite's alarm."""
    return os.environ.get(MUTATE_ENV) or None


class Flag(str, Enum):
    STRAIGHT = "straight"
    COMPLEMENTED = "complemented"
    BOTH = "both"


@dataclass(frozen=True)
class DeltaHypergraph:
    """Edges ``F ^ X`` (straight) and/or ``(V - F) ^ X`` (complemented) for F in an ABA-free family."""

    f: OrderedHypergraph
    x: frozenset[int]
    flags: tuple[Flag, ...]

    def __post_init__(self):
        if len(self.flags) != len(self.f.edges):
            raise ValidationError("one flag per edge of F is required")
        if any(v < 0 or v >= self.f.n for v in self.x):
            raise ValidationError("X must be a subset of the vertex set")
        verdict = is_aba_free(self.f)
        if not verdict:
            raise ValidationError("F is not ABA-free", witness=verdict.witness)

    @classmethod
    def build(cls, n: int, f: Iterable[Iterable[int]], x: Iterable[int], flags: Sequence[str | Flag]) -> "DeltaHypergraph":
        """Pair each raw F-edge with its flag; repeated edges merge their flags."""
        raw = [tuple(sorted(set(e))) for e in f]
        if len(raw) != len(flags):
            raise ValidationError("one flag per edge of F is required")
        merged: dict[tuple[int, ...], set[Flag]] = {}
        for e, flag in zip(raw, flags):
            flag = Flag(flag)
            kinds = {Flag.STRAIGHT, Flag.COMPLEMENTED} if flag is Flag.BOTH else {flag}
            merged.setdefault(e, set()).update(kinds)
        family = canonicalize(merged, n)
        out = []
        for e in family.edges:
            kinds = merged[e]
            out.append(Flag.BOTH if len(kinds) == 2 else next(iter(kinds)))
        return cls(family, frozenset(x), tuple(out))

    @property
    def n(self) -> int:
        return self.f.n

    @property
    def is_dual_pshp(self) -> bool:
        return all(flag is Flag.STRAIGHT for flag in self.flags)

    @cached_property
    def derived(self) -> OrderedHypergraph:
        full = set(range(self.n))
        raw = []
        for e, flag in zip(self.f.edges, self.flags):
            if flag is not Flag.COMPLEMENTED:
                raw.append(set(e) ^ self.x)
            if flag is not Flag.STRAIGHT:
                raw.append((full - set(e)) ^ self.x)
        return canonicalize(raw, self.n)


@dataclass(frozen=True)
class HittingCert:
    vertices: tuple[int, ...]
    bound: int

    def validate(self, h: OrderedHypergraph) -> bool:
        mask = to_mask(self.vertices)
        return len(self.vertices) <= self.bound and all(e & mask for e in h.masks() if e)


@dataclass(frozen=True)
class CoverCert:
    edge_indices: tuple[int, ...]
    bound: int

    def validate(self, h: OrderedHypergraph) -> bool:
        union = 0
        masks = h.masks()
        for i in self.edge_indices:
            union |= masks[i]
        return len(self.edge_indices) <= self.bound and union == (1 << h.n) - 1


def _as_base(h: OrderedHypergraph | PshpHypergraph) -> OrderedHypergraph:
    return h.base if isinstance(h, PshpHypergraph) else h


def _require_aba_free(h: OrderedHypergraph) -> None:
    verdict = is_aba_free(h)
    if not verdict:
        raise PreconditionError("family is not ABA-free", witness=verdict.witness)


def _require_no_empty_edge(h: OrderedHypergraph) -> None:
    if h.edges and h.edges[0] == ():
        raise PreconditionError("the empty edge cannot be hit", witness=())


def _require_pairwise(h: OrderedHypergraph) -> None:
    bad = disjoint_pair(h)
    if bad is not None:
        i, j = bad
        raise PreconditionError(f"edges #{i} {list(h.edges[i])} and #{j} {list(h.edges[j])} are disjoint", witness=bad)


def _require_triplewise(h: OrderedHypergraph) -> None:
    bad = disjoint_triple(h)
    if bad is not None:
        shown = ", ".join(f"#{i} {list(h.edges[i])}" for i in bad)
        raise PreconditionError(f"edges {shown} have no common vertex", witness=bad)


def _require_pairs_covered(h: OrderedHypergraph) -> None:
    if h.n < 2:
        raise PreconditionError("needs at least 2 vertices", witness=h.n)
    bad = uncovered_pair(h)
    if bad is not None:
        raise PreconditionError(f"vertices {bad} share no edge", witness=bad)


def _require_triples_covered(h: OrderedHypergraph) -> None:
    if h.n < 3:
        raise PreconditionError("needs at least 3 vertices", witness=h.n)
    bad = uncovered_triple(h)
    if bad is not None:
        raise PreconditionError(f"vertices {bad} share no edge", witness=bad)


def _finish_hit(h: OrderedHypergraph, chosen: Iterable[int], bound: int, name: str) -> HittingCert:
    cert = HittingCert(tuple(sorted(chosen)), bound)
    if not cert.validate(h):
        raise TheoremContradiction(f"{name}: certificate {list(cert.vertices)} fails (bound {bound})", detail=cert)
    return cert


def _finish_cover(h: OrderedHypergraph, chosen: Iterable[int], bound: int, name: str) -> CoverCert:
    cert = CoverCert(tuple(sorted(chosen)), bound)
    if not cert.validate(h):
        raise TheoremContradiction(f"{name}: certificate {list(cert.edge_indices)} fails (bound {bound})", detail=cert)
    return cert


def minimal_hitting_subset(h: OrderedHypergraph, pool: Iterable[int]) -> list[int]:
    """Shrink a hitting pool to a containment-minimal hitting set.

    Repeatedly drops the smallest vertex whose removal keeps every edge hit.
    """
    masks = [e for e in h.masks() if e]
    chosen = sorted(set(pool))

    def hitting(vs):
        mask = to_mask(vs)
        return all(e & mask for e in masks)

    if not hitting(chosen):
        raise TheoremContradiction("starting pool does not hit every edge", detail=chosen)
    shrunk = True
    while shrunk:
        shrunk = False
        for v in chosen:
            rest = [u for u in chosen if u != v]
            if hitting(rest):
                chosen = rest
                shrunk = True
                break
    return chosen


def _first_hitting(h: OrderedHypergraph, candidates: Sequence[int], bound: int) -> tuple[int, ...] | None:
    masks = [e for e in h.masks() if e]
    for size in range(bound + 1):
        for cand in combinations(candidates, size):
            mask = to_mask(cand)
            if all(e & mask for e in masks):
                return cand
    return None


def _first_cover(h: OrderedHypergraph, bound: int) -> tuple[int, ...] | None:
    masks = h.masks()
    full = (1 << h.n) - 1
    for size in range(1, bound + 1):
        for cand in combinations(range(len(masks)), size):
            union = 0
            for i in cand:
                union |= masks[i]
            if union == full:
                return cand
    return None


def hit_aba_2(f: OrderedHypergraph) -> HittingCert:
    """Two vertices hit a pairwise intersecting ABA-free family."""
    _require_aba_free(f)
    _require_no_empty_edge(f)
    _require_pairwise(f)
    pool = unskippable_vertices(f)
    if active_mutation() == "aba-pool":
        pool = range(f.n)
    return _finish_hit(f, minimal_hitting_subset(f, pool), 2, "hit_aba_2")


def hit_pshp_pairwise(p: PshpHypergraph) -> HittingCert:
    """Three extremal vertices hit a pairwise intersecting pseudohalfplane family."""
    h = p.base
    _require_no_empty_edge(h)
    _require_pairwise(h)
    chosen = minimal_hitting_subset(h, p.profile.extremal_set)
    return _finish_hit(h, chosen, 3, "hit_pshp_pairwise")


def hit_pshp_triplewise(p: PshpHypergraph) -> HittingCert:
    """Two vertices hit a triplewise intersecting pseudohalfplane family (found by enumeration)."""
    h = p.base
    _require_no_empty_edge(h)
    _require_triplewise(h)
    found = _first_hitting(h, range(h.n), 2)
    if found is None:
        raise TheoremContradiction("hit_pshp_triplewise: no hitting set of size <= 2", detail=h)
    return _finish_hit(h, found, 2, "hit_pshp_triplewise")


def cover_aba_2(f: OrderedHypergraph) -> CoverCert:
    _require_aba_free(f)
    _require_pairs_covered(f)
    found = _first_cover(f, 2)
    if found is None:
        raise TheoremContradiction("cover_aba_2: no cover with <= 2 edges", detail=f)
    return _finish_cover(f, found, 2, "cover_aba_2")


def cover_pshp_pairwise(p: PshpHypergraph) -> CoverCert:
    h = p.base
    _require_pairs_covered(h)
    found = _first_cover(h, 3)
    if found is None:
        raise TheoremContradiction("cover_pshp_pairwise: no cover with <= 3 edges", detail=h)
    return _finish_cover(h, found, 3, "cover_pshp_pairwise")


def cover_pshp_3wise(p: PshpHypergraph) -> CoverCert:
    """Two edges cover the vertices when every vertex triple shares an edge.

    Take the edge H1 meeting the most extremal vertices. If it misses some,
    its trace on the extremal circle is an arc with ends p, q; the extremal
    vertex r right after the arc is missed, and any edge through p, q, r
    finishes the cover.
    """
    h = p.base
    _require_triples_covered(h)
    profile = p.profile
    extremal = profile.extremal_set
    masks = h.masks()
    full = (1 << h.n) - 1
    c_mask = to_mask(extremal)

    def rank(i):
        if active_mutation() == "h1-rank":
            return -i  # every edge ties; the lowest index wins
        return (bin(masks[i] & c_mask).count("1"), -i)

    h1 = max(range(len(masks)), key=rank)
    if masks[h1] & c_mask == c_mask:
        if masks[h1] != full:
            raise TheoremContradiction("an edge containing every extremal vertex misses a vertex", detail=h1)
        return _finish_cover(h, [h1], 2, "cover_pshp_3wise")

    arc = edge_circular_interval(profile, h.edges[h1])
    if not arc.is_interval:
        raise TheoremContradiction("edge does not meet the extremal circle in an arc", detail=h1)
    start, length = arc.arc
    slots = profile.slot_vertices
    total = len(slots)
    a = slots[start]
    b = slots[(start + length - 1) % total]
    r = slots[(start + length) % total]
    if (masks[h1] >> r) & 1:
        raise TheoremContradiction("vertex after the arc lies in H1", detail=(h1, r))
    if a == b:
        third = next(v for v in range(h.n) if v not in (a, r))
        want = {a, r, third}
    else:
        want = {a, b, r}
    want_mask = to_mask(want)
    h2 = next((i for i, e in enumerate(masks) if e & want_mask == want_mask), None)
    if h2 is None:
        raise PreconditionError(f"vertices {sorted(want)} share no edge", witness=tuple(sorted(want)))
    # maximality of H1 rules out an H2 that swallows H1's arc and r as well
    if (masks[h1] & c_mask) & ~masks[h2] == 0:
        raise TheoremContradiction("H2 contains H1's extremal arc plus r; H1 was not maximal", detail=(h1, h2))
    if masks[h1] | masks[h2] != full:
        raise TheoremContradiction("H1 and H2 do not cover the vertex set", detail=(h1, h2))
    return _finish_cover(h, [h1, h2], 2, "cover_pshp_3wise")


def hit_hemi_pairwise(d: DeltaHypergraph) -> HittingCert:
    h = d.derived
    _require_no_empty_edge(h)
    _require_pairwise(h)
    found = _first_hitting(h, range(h.n), 4)
    if found is None:
        raise TheoremContradiction("hit_hemi_pairwise: no hitting set of size <= 4", detail=h)
    return _finish_hit(h, found, 4, "hit_hemi_pairwise")


def cover_hemi_pairwise(d: DeltaHypergraph) -> CoverCert:
    h = d.derived
    _require_pairs_covered(h)
    found = _first_cover(h, 4)
    if found is None:
        raise TheoremContradiction("cover_hemi_pairwise: no cover with <= 4 edges", detail=h)
    return _finish_cover(h, found, 4, "cover_hemi_pairwise")


def as_hypergraph(h: OrderedHypergraph | PshpHypergraph | DeltaHypergraph) -> OrderedHypergraph:
    """The plain edge family a certificate refers to."""
    if isinstance(h, DeltaHypergraph):
        return h.derived
    return _as_base(h)
