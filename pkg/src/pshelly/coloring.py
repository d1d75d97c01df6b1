"""Proper colorings: 3 colors for ABA-free, 4 for pseudohalfplane, 3 for dual pseudohalfplane."""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import OrderedHypergraph, PreconditionError, TheoremContradiction, complement_family, induced_subhypergraph, is_aba_free
from .helly import DeltaHypergraph
from .oracle import degeneracy
from .structure import PshpHypergraph, nearest_unskippable, unskippable_vertices


@dataclass(frozen=True)
class Coloring:
    color: tuple[int, ...]
    palette_size: int

    def __post_init__(self):
        if any(c < 1 or c > self.palette_size for c in self.color):
            raise ValueError(f"colors must lie in 1..{self.palette_size}")


@dataclass(frozen=True)
class AuxGraph:
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]
    cross_edges: frozenset[tuple[int, int]] = field(default=frozenset())

    def adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in self.vertices}
        for u, w in self.edges:
            adj[u].add(w)
            adj[w].add(u)
        return adj


def is_proper(h: OrderedHypergraph, c: Coloring | tuple[int, ...]) -> bool:
    colors = c.color if isinstance(c, Coloring) else c
    return all(len({colors[v] for v in e}) > 1 for e in h.edges if len(e) >= 2)


def _least_free(forbidden: set[int]) -> int:
    c = 1
    while c in forbidden:
        c += 1
    return c


def color_aba_3(f: OrderedHypergraph) -> Coloring:
    verdict = is_aba_free(f)
    if not verdict:
        raise PreconditionError("family is not ABA-free", witness=verdict.witness)
    unskippable = unskippable_vertices(f)
    color = [3] * f.n
    for i, v in enumerate(sorted(unskippable)):
        color[v] = 1 + i % 2
    return Coloring(tuple(color), 3)


def color_pshp_4(p: PshpHypergraph) -> Coloring:
    """Extremal vertices get one of 3 colors, differing from the previous top-
    and bottomvertex as applicable; everything else gets color 4."""
    profile = p.profile
    tops, bottoms = set(profile.topvertices), set(profile.bottomvertices)
    color = [4] * p.n
    last_top = last_bottom = None
    for v in range(p.n):
        if v not in tops and v not in bottoms:
            continue
        forbidden = set()
        if v in tops and last_top is not None:
            forbidden.add(color[last_top])
        if v in bottoms and last_bottom is not None:
            forbidden.add(color[last_bottom])
        color[v] = _least_free(forbidden)
        if v in tops:
            last_top = v
        if v in bottoms:
            last_bottom = v
    coloring = Coloring(tuple(color), 4)
    if not is_proper(p.base, coloring):
        raise TheoremContradiction("color_pshp_4 produced a monochromatic edge", detail=coloring)
    return coloring


def _restricted_unskippables(family: OrderedHypergraph, keep: list[int]) -> tuple[OrderedHypergraph, dict[int, int], list[int]]:
    sub, remap = induced_subhypergraph(family, keep)
    back = {new: old for old, new in remap.items()}
    return sub, back, sorted(back[u] for u in unskippable_vertices(sub))


def dual_aux_graph(d: DeltaHypergraph) -> tuple[AuxGraph, dict]:
    """Auxiliary graph on the unskippable vertices of the two restricted families.

    Outside X the derived edges restrict to F; inside X they restrict to the
    complements of F, so the X side uses the complement family.
    """
    n = d.n
    outside = [v for v in range(n) if v not in d.x]
    inside = sorted(d.x)
    fam_out, back_out, u_out = _restricted_unskippables(d.f, outside)
    fam_in, back_in, u_in = _restricted_unskippables(complement_family(d.f), inside)

    edges = set()
    cross = set()
    u_out_set, u_in_set = set(u_out), set(u_in)
    for e in d.derived.edges:
        if len(e) == 2:
            v, w = e
            if v in d.x:
                v, w = w, v
            if v in u_out_set and w in u_in_set:
                cross.add((v, w))
    for seq in (u_out, u_in):
        edges.update(zip(seq, seq[1:]))
    edges.update(cross)

    for (v1, w1) in cross:
        for (v2, w2) in cross:
            if v1 < v2 and w1 < w2:
                raise TheoremContradiction("crossing pair of cross edges in the auxiliary graph", detail=((v1, w1), (v2, w2)))

    graph = AuxGraph(frozenset(u_out) | frozenset(u_in), frozenset(tuple(sorted(e)) for e in edges), frozenset(cross))
    parts = {
        "outside": (fam_out, back_out),
        "inside": (fam_in, back_in),
    }
    return graph, parts


def color_dual_pshp_3(d: DeltaHypergraph) -> Coloring:
    if not d.is_dual_pshp:
        raise PreconditionError("every flag must be straight for a dual pseudohalfplane hypergraph")
    graph, parts = dual_aux_graph(d)
    k, order = degeneracy(graph.vertices, graph.edges)
    if k > 2:
        raise TheoremContradiction(f"auxiliary graph has degeneracy {k} > 2", detail=graph)

    adj = graph.adjacency()
    color = [0] * d.n
    for v in reversed(order):
        color[v] = _least_free({color[w] for w in adj[v] if color[w]})

    for fam, back in parts.values():
        sub_unskippable = unskippable_vertices(fam)
        for new in range(fam.n):
            if new in sub_unskippable:
                continue
            before, after = nearest_unskippable(fam, new)
            color[back[new]] = _least_free({color[back[before]], color[back[after]]})

    coloring = Coloring(tuple(color), 3)
    if not is_proper(d.derived, coloring):
        raise TheoremContradiction("color_dual_pshp_3 produced a monochromatic edge", detail=coloring)
    return coloring
