"""Exhaustive ground truth for small instances.

Everything here is deliberately naive and shares nothing with the Helly
algorithms beyond the core types, so that agreement between the two is
evidence rather than tautology.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterable, Sequence

from .core import OrderedHypergraph, PreconditionError, canonicalize


class BudgetError(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_n: int = 12
    max_m: int = 14
    max_subset_size: int = 4
    time_cap: float = 10.0

    def check_size(self, n: int, m: int) -> None:
        if n > self.max_n:
            raise BudgetError(f"n={n} exceeds oracle budget max_n={self.max_n}")
        if m > self.max_m:
            raise BudgetError(f"m={m} exceeds oracle budget max_m={self.max_m}")

    def clock(self) -> "_Clock":
        return _Clock(self.time_cap)


DEFAULT_BUDGET = OracleBudget()


class _Clock:
    def __init__(self, cap: float):
        self.deadline = time.monotonic() + cap
        self.ticks = 0

    def tick(self) -> None:
        self.ticks += 1
        if self.ticks % 4096 == 0 and time.monotonic() > self.deadline:
            raise BudgetError("oracle time cap exceeded")


def _sets(h: OrderedHypergraph) -> list[frozenset[int]]:
    return [frozenset(e) for e in h.edges]


def min_hitting_set(h: OrderedHypergraph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, ...]:
    """Smallest vertex set meeting every edge, first in (size, lex) order."""
    budget.check_size(h.n, h.m)
    edges = _sets(h)
    if any(not e for e in edges):
        raise PreconditionError("an empty edge cannot be hit")
    masks = h.masks()
    clock = budget.clock()
    for size in range(0, min(h.n, budget.max_subset_size) + 1):
        for cand in combinations(range(h.n), size):
            clock.tick()
            chosen = sum(1 << v for v in cand)
            if all(chosen & e for e in masks):
                return cand
    raise BudgetError(f"no hitting set of size <= {budget.max_subset_size}")


def min_cover(h: OrderedHypergraph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, ...]:
    """Fewest edges whose union is the vertex set, as edge indices."""
    budget.check_size(h.n, h.m)
    edges = _sets(h)
    everything = frozenset(range(h.n))
    missing = everything.difference(*edges) if edges else everything
    if missing:
        raise PreconditionError(f"vertex {min(missing)} lies in no edge", witness=min(missing))
    masks = h.masks()
    full = (1 << h.n) - 1
    clock = budget.clock()
    for size in range(0, min(h.m, budget.max_subset_size) + 1):
        for cand in combinations(range(h.m), size):
            clock.tick()
            union = 0
            for i in cand:
                union |= masks[i]
            if union == full:
                return cand
    raise BudgetError(f"no cover with <= {budget.max_subset_size} edges")


def min_hitting_size_bnb(h: OrderedHypergraph) -> int:
    """Second route to the hitting number: branch on the vertices of an unhit edge."""
    edges = [frozenset(e) for e in h.edges]
    if any(not e for e in edges):
        raise PreconditionError("an empty edge cannot be hit")
    best = [len(edges)]

    def branch(chosen: frozenset[int]) -> None:
        if len(chosen) >= best[0]:
            return
        unhit = next((e for e in edges if not e & chosen), None)
        if unhit is None:
            best[0] = len(chosen)
            return
        for v in sorted(unhit):
            branch(chosen | {v})

    branch(frozenset())
    return best[0]


def min_cover_size_bnb(h: OrderedHypergraph) -> int:
    edges = [frozenset(e) for e in h.edges]
    best = [len(edges) + 1]

    def branch(covered: frozenset[int], used: int) -> None:
        if used >= best[0]:
            return
        free = next((v for v in range(h.n) if v not in covered), None)
        if free is None:
            best[0] = used
            return
        for e in edges:
            if free in e:
                branch(covered | e, used + 1)

    branch(frozenset(), 0)
    if best[0] > len(edges):
        raise PreconditionError("some vertex lies in no edge")
    return best[0]


def chromatic_number(h: OrderedHypergraph, cap: int = 6, budget: OracleBudget = DEFAULT_BUDGET) -> int | None:
    """Least number of colors with no monochromatic edge of size >= 2.

    Returns ``None`` when more than ``cap`` colors are needed.
    """
    if h.n > budget.max_n:
        raise BudgetError(f"n={h.n} exceeds oracle budget max_n={budget.max_n}")
    edges = [e for e in h.edges if len(e) >= 2]
    if h.n == 0:
        return 0
    # an edge is checked once all its vertices are colored, i.e. at its max vertex
    closing = [[] for _ in range(h.n)]
    for e in edges:
        closing[e[-1]].append(e)
    clock = budget.clock()

    def extend(color: list[int], v: int, k: int, used: int) -> bool:
        if v == h.n:
            return True
        # symmetry: a fresh color is always the next unused one
        for c in range(min(used + 1, k)):
            clock.tick()
            color[v] = c
            if all(len({color[u] for u in e}) > 1 for e in closing[v]):
                if extend(color, v + 1, k, max(used, c + 1)):
                    return True
        color[v] = -1
        return False

    for k in range(1, cap + 1):
        if extend([-1] * h.n, 0, k, 0):
            return k
    return None


def degeneracy(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> tuple[int, list[int]]:
    """Repeatedly remove a minimum-degree vertex (lowest label on ties).

    Returns the degeneracy and the removal order.
    """
    adj = {v: set() for v in vertices}
    for u, w in edges:
        if u == w:
            continue
        adj[u].add(w)
        adj[w].add(u)
    order = []
    k = 0
    while adj:
        v = min(adj, key=lambda x: (len(adj[x]), x))
        k = max(k, len(adj[v]))
        for w in adj.pop(v):
            adj[w].discard(v)
        order.append(v)
    return k, order


def _aba_free(sets: Sequence[frozenset[int]], rank: Sequence[int]) -> bool:
    """Pattern test under an arbitrary vertex order: vertex v sits at rank[v]."""
    for a, b in permutations(sets, 2):
        a_only = sorted(rank[v] for v in a - b)
        b_only = [rank[v] for v in b - a]
        if len(a_only) >= 2 and any(a_only[0] < y < a_only[-1] for y in b_only):
            return False
    return True


def find_pshp_witness(
    h: OrderedHypergraph,
    search_orders: bool = False,
    budget: OracleBudget = OracleBudget(max_n=7, max_m=10, time_cap=60.0),
) -> tuple[tuple[int, ...], tuple[str, ...]] | None:
    """Search for a vertex order and top/bottom labels making tops + co-bottoms ABA-free.

    The order is returned as a sequence of original vertices, leftmost first.
    ``None`` means the search was exhausted without success.
    """
    budget.check_size(h.n, h.m)
    clock = budget.clock()
    full = frozenset(range(h.n))
    edges = _sets(h)
    orders = permutations(range(h.n)) if search_orders else [tuple(range(h.n))]
    for order in orders:
        rank = [0] * h.n
        for pos, v in enumerate(order):
            rank[v] = pos
        for labels in product(("top", "bottom"), repeat=h.m):
            clock.tick()
            family = {e if lab == "top" else full - e for e, lab in zip(edges, labels)}
            if _aba_free(list(family), rank):
                return tuple(order), labels
    return None


def find_dual_pshp_witness(
    h: OrderedHypergraph,
    search_orders: bool = True,
    budget: OracleBudget = OracleBudget(max_n=7, max_m=64, time_cap=60.0),
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Search for an order and a set X with {e ^ X : e in H} ABA-free.

    Given X the family is forced (F = {e ^ X}), so enumerating orders and X is
    exhaustive. Returns ``(order, X)`` or ``None``.
    """
    budget.check_size(h.n, h.m)
    clock = budget.clock()
    edges = _sets(h)
    orders = permutations(range(h.n)) if search_orders else [tuple(range(h.n))]
    for order in orders:
        rank = [0] * h.n
        for pos, v in enumerate(order):
            rank[v] = pos
        for size in range(h.n + 1):
            for x in combinations(range(h.n), size):
                clock.tick()
                xs = frozenset(x)
                family = list({e ^ xs for e in edges})
                if _aba_free(family, rank):
                    return tuple(order), x
    return None


def brute_aba_free(h: OrderedHypergraph) -> bool:
    """Triple loop straight from the definition."""
    sets = _sets(h)
    for a in sets:
        for b in sets:
            for x, y, z in combinations(range(h.n), 3):
                if x in a and z in a and x not in b and z not in b and y in b and y not in a:
                    return False
    return True


def relabel(h: OrderedHypergraph, order: Sequence[int]) -> OrderedHypergraph:
    """Renumber vertices so that ``order[i]`` becomes vertex ``i``."""
    rank = {v: i for i, v in enumerate(order)}
    return canonicalize([[rank[v] for v in e] for e in h.edges], h.n)
