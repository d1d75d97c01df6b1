"""Ordered hypergraphs, canonical form, and the ABA-free test.

Vertices are the integers ``0..n-1`` and their order is the numeric order.
Edges are stored as strictly increasing tuples; a hypergraph keeps its edges
deduplicated and sorted lexicographically, so two equal families always
compare equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

Edge = tuple[int, ...]


class ValidationError(ValueError):
    """Malformed input: bad vertex index, broken class invariant, bad file."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class PreconditionError(Exception):
    """The hypothesis of a theorem does not hold for the given instance."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class TheoremContradiction(AssertionError):
    """A proven bound appears violated. Always an implementation bug."""

    def __init__(self, message: str, detail=None):
        super().__init__(message)
        self.detail = detail


@dataclass(frozen=True)
class OrderedHypergraph:
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError(f"negative vertex count {self.n}")
        for e in self.edges:
            if any(v < 0 or v >= self.n for v in e):
                raise ValidationError(f"edge {list(e)} has a vertex outside [0, {self.n})")
            if any(a >= b for a, b in zip(e, e[1:])):
                raise ValidationError(f"edge {list(e)} is not strictly increasing")
        if any(a >= b for a, b in zip(self.edges, self.edges[1:])):
            raise ValidationError("edges are not sorted and distinct; use canonicalize()")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def masks(self) -> list[int]:
        return [to_mask(e) for e in self.edges]

    def as_lists(self) -> list[list[int]]:
        return [list(e) for e in self.edges]

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class AbaVerdict:
    is_aba_free: bool
    # (edge index of A, edge index of B, x, y, z) with x<y<z, x,z in A-B, y in B-A
    witness: tuple[int, int, int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.is_aba_free


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> Edge:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _lowbit_index(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def canonicalize(raw: Iterable[Iterable[int]], n: int) -> OrderedHypergraph:
    """Sort and deduplicate members and edges.

    >>> canonicalize([[2, 0, 2], [0, 2]], 3).edges
    ((0, 2),)
    """
    edges = set()
    for e in raw:
        members = tuple(sorted(set(int(v) for v in e)))
        for v in members:
            if v < 0 or v >= n:
                raise ValidationError(f"vertex {v} outside [0, {n})", witness=list(e))
        edges.add(members)
    return OrderedHypergraph(n, tuple(sorted(edges)))


def aba_pattern(a: int, b: int) -> tuple[int, int, int] | None:
    """Least (x, y, z) with x<y<z, x,z in A-B and y in B-A, for bitmasks A, B."""
    a_only = a & ~b
    b_only = b & ~a
    if not a_only or not b_only:
        return None
    x = _lowbit_index(a_only)
    later_b = b_only >> (x + 1) << (x + 1)
    if not later_b:
        return None
    y = _lowbit_index(later_b)
    later_a = a_only >> (y + 1) << (y + 1)
    if not later_a:
        return None
    return x, y, _lowbit_index(later_a)


def is_aba_free(h: OrderedHypergraph) -> AbaVerdict:
    masks = h.masks()
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if i == j:
                continue
            pattern = aba_pattern(a, b)
            if pattern is not None:
                return AbaVerdict(False, (i, j) + pattern)
    return AbaVerdict(True)


def masks_aba_free(masks: Sequence[int]) -> bool:
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            if aba_pattern(a, b) or aba_pattern(b, a):
                return False
    return True


def complement_family(h: OrderedHypergraph) -> OrderedHypergraph:
    full = set(range(h.n))
    return canonicalize((full.difference(e) for e in h.edges), h.n)


def induced_subhypergraph(h: OrderedHypergraph, keep: Iterable[int]) -> tuple[OrderedHypergraph, dict[int, int]]:
    """Restrict every edge to ``keep``; vertices are renumbered in order.

    Returns the induced hypergraph and the old->new index map. Restricted edges
    that coincide are merged; an edge disjoint from ``keep`` becomes the empty
    edge.
    """
    kept = sorted(set(keep))
    for v in kept:
        if v < 0 or v >= h.n:
            raise ValidationError(f"vertex {v} outside [0, {h.n})")
    remap = {v: i for i, v in enumerate(kept)}
    raw = [[remap[v] for v in e if v in remap] for e in h.edges]
    return canonicalize(raw, len(kept)), remap


def disjoint_pair(h: OrderedHypergraph) -> tuple[int, int] | None:
    masks = h.masks()
    for i, j in combinations(range(len(masks)), 2):
        if not masks[i] & masks[j]:
            return i, j
    return None


def disjoint_triple(h: OrderedHypergraph) -> tuple[int, int, int] | None:
    masks = h.masks()
    for i, j, k in combinations(range(len(masks)), 3):
        if not masks[i] & masks[j] & masks[k]:
            return i, j, k
    return None


def uncovered_pair(h: OrderedHypergraph) -> tuple[int, int] | None:
    masks = h.masks()
    for u, v in combinations(range(h.n), 2):
        want = (1 << u) | (1 << v)
        if not any(e & want == want for e in masks):
            return u, v
    return None


def uncovered_triple(h: OrderedHypergraph) -> tuple[int, int, int] | None:
    masks = h.masks()
    for u, v, w in combinations(range(h.n), 3):
        want = (1 << u) | (1 << v) | (1 << w)
        if not any(e & want == want for e in masks):
            return u, v, w
    return None


def pairwise_intersecting(h: OrderedHypergraph) -> bool:
    return disjoint_pair(h) is None


def triplewise_intersecting(h: OrderedHypergraph) -> bool:
    return disjoint_triple(h) is None


def pairs_covered(h: OrderedHypergraph) -> bool:
    return uncovered_pair(h) is None


def triples_covered(h: OrderedHypergraph) -> bool:
    return uncovered_triple(h) is None


def hits(h: OrderedHypergraph, vertices: Iterable[int]) -> bool:
    """True if ``vertices`` meets every nonempty edge."""
    mask = to_mask(vertices)
    return all(e & mask for e in h.masks() if e)


def covers(h: OrderedHypergraph, edge_indices: Iterable[int]) -> bool:
    union = 0
    masks = h.masks()
    for i in edge_indices:
        union |= masks[i]
    return union == (1 << h.n) - 1
