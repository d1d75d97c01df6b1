"""Pseudohalfplane hypergraphs and their extremal vertices.

A pseudohalfplane hypergraph carries, per edge, whether it is a topset, a
bottomset or both. The witness family is ``tops + complements(bottoms)``; it
must be ABA-free. Topvertices are the unskippable vertices of the witness,
bottomvertices the unskippable vertices of its complement family, and the
extremal vertices are laid out on a circle as

    v_1, t_2, ..., t_{k-1}, v_n, b_{l-1}, ..., b_2

A vertex that is interior to both hulls appears twice, so the circle is kept
as a sequence of *slots* rather than of vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable

from .core import (
    Edge,
    OrderedHypergraph,
    ValidationError,
    canonicalize,
    complement_family,
    is_aba_free,
)


class Side(str, Enum):
    TOP = "top"
    BOTTOM = "bottom"
    BOTH = "both"

    @property
    def is_top(self) -> bool:
        return self is not Side.BOTTOM

    @property
    def is_bottom(self) -> bool:
        return self is not Side.TOP


@dataclass(frozen=True)
class PshpHypergraph:
    base: OrderedHypergraph
    sides: tuple[Side, ...]

    def __post_init__(self):
        if len(self.sides) != len(self.base.edges):
            raise ValidationError("one side label per edge is required")
        verdict = is_aba_free(self.witness)
        if not verdict:
            raise ValidationError("witness family tops + complements(bottoms) is not ABA-free", witness=verdict.witness)

    @classmethod
    def from_sides(cls, n: int, top: Iterable[Iterable[int]], bottom: Iterable[Iterable[int]]) -> "PshpHypergraph":
        tops = set(canonicalize(top, n).edges)
        bottoms = set(canonicalize(bottom, n).edges)
        base = OrderedHypergraph(n, tuple(sorted(tops | bottoms)))
        sides = []
        for e in base.edges:
            if e in tops and e in bottoms:
                sides.append(Side.BOTH)
            elif e in tops:
                sides.append(Side.TOP)
            else:
                sides.append(Side.BOTTOM)
        return cls(base, tuple(sides))

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.base.edges

    @property
    def tops(self) -> list[Edge]:
        return [e for e, s in zip(self.base.edges, self.sides) if s.is_top]

    @property
    def bottoms(self) -> list[Edge]:
        return [e for e, s in zip(self.base.edges, self.sides) if s.is_bottom]

    @cached_property
    def witness(self) -> OrderedHypergraph:
        full = set(range(self.n))
        raw = self.tops + [tuple(full.difference(e)) for e in self.bottoms]
        return canonicalize(raw, self.n)

    @cached_property
    def profile(self) -> "ExtremalProfile":
        return extremal_profile(self)

    def subfamily(self, indices: Iterable[int]) -> "PshpHypergraph":
        idx = sorted(set(indices))
        return PshpHypergraph(
            OrderedHypergraph(self.n, tuple(self.base.edges[i] for i in idx)),
            tuple(self.sides[i] for i in idx),
        )


@dataclass(frozen=True)
class ExtremalProfile:
    n: int
    topvertices: tuple[int, ...]
    bottomvertices: tuple[int, ...]
    slots: tuple[tuple[int, Side], ...]

    @property
    def extremal_set(self) -> frozenset[int]:
        return frozenset(self.topvertices) | frozenset(self.bottomvertices)

    @property
    def slot_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.slots)


@dataclass(frozen=True)
class ArcResult:
    is_interval: bool
    # (start slot, length); length 0 for an edge that misses every slot
    arc: tuple[int, int] | None = None

    def slot_indices(self, total: int) -> list[int]:
        if not self.arc:
            return []
        start, length = self.arc
        return [(start + i) % total for i in range(length)]


def unskippable_vertices(f: OrderedHypergraph) -> frozenset[int]:
    skipped = set()
    for e in f.edges:
        if len(e) < 2:
            continue
        members = set(e)
        skipped.update(v for v in range(e[0] + 1, e[-1]) if v not in members)
    return frozenset(range(f.n)) - skipped


def nearest_unskippable(f: OrderedHypergraph, v: int) -> tuple[int | None, int | None]:
    """Closest unskippable vertices strictly before and strictly after ``v``."""
    unskippable = unskippable_vertices(f)
    before = max((u for u in unskippable if u < v), default=None)
    after = min((u for u in unskippable if u > v), default=None)
    return before, after


def circular_slots(topvertices: tuple[int, ...], bottomvertices: tuple[int, ...]) -> tuple[tuple[int, Side], ...]:
    slots = [(t, Side.TOP) for t in topvertices]
    slots.extend((b, Side.BOTTOM) for b in reversed(bottomvertices[1:-1]))
    return tuple(slots)


def extremal_profile(p: PshpHypergraph) -> ExtremalProfile:
    f = p.witness
    tops = tuple(sorted(unskippable_vertices(f)))
    bottoms = tuple(sorted(unskippable_vertices(complement_family(f))))
    return ExtremalProfile(p.n, tops, bottoms, circular_slots(tops, bottoms))


def is_extremal_by_singleton(p: PshpHypergraph, v: int, side: Side) -> bool:
    """Can ``v`` be cut off from the rest by one extra pseudohalfplane?

    Adds ``{v}`` (top) or ``V - {v}`` (bottom) to the witness and re-tests
    ABA-freeness; independent of the skip-based computation in
    :func:`extremal_profile`.
    """
    if side is Side.BOTH:
        raise ValueError("ask about TOP or BOTTOM separately")
    extra = (v,) if side is Side.TOP else tuple(u for u in range(p.n) if u != v)
    f = p.witness
    return bool(is_aba_free(canonicalize(list(f.edges) + [extra], p.n)))


def mark_slots(profile: ExtremalProfile, members: Iterable[int]) -> list[bool]:
    inside = set(members)
    return [v in inside for v, _ in profile.slots]


def circular_run(marked: list[bool]) -> ArcResult:
    total = len(marked)
    count = sum(marked)
    if count == 0:
        return ArcResult(True, (0, 0))
    if count == total:
        return ArcResult(True, (0, total))
    starts = [i for i in range(total) if marked[i] and not marked[i - 1]]
    if len(starts) != 1:
        return ArcResult(False, None)
    return ArcResult(True, (starts[0], count))


def edge_circular_interval(profile: ExtremalProfile, e: Iterable[int]) -> ArcResult:
    return circular_run(mark_slots(profile, e))
