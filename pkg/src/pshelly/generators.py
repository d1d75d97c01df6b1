"""Instance generators: halfplanes on points, lower-bound constructions,
random ABA-free and pseudohalfplane families, and wiring diagrams."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import OrderedHypergraph, ValidationError, aba_pattern, canonicalize
from .structure import PshpHypergraph

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class PointSet:
    points: tuple[Point, ...]

    def __post_init__(self):
        xs = [p[0] for p in self.points]
        if len(set(xs)) != len(xs):
            raise ValidationError("points must have distinct x-coordinates")

    @classmethod
    def of(cls, coords) -> "PointSet":
        """Build from (x, y) pairs of ints/strings/Fractions, sorted by x."""
        pts = sorted((Fraction(x), Fraction(y)) for x, y in coords)
        return cls(tuple(pts))

    def __len__(self) -> int:
        return len(self.points)


def orientation(p: Point, q: Point, r: Point) -> Fraction:
    """Positive when r lies to the left of the directed line p->q."""
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def upward_halfplane_sets(ps: PointSet) -> set[tuple[int, ...]]:
    """All subsets cut off by closed or open upward halfplanes.

    Any such subset other than {} and V can be moved, without changing it,
    onto a line through two points; the points on that line that stay inside
    then form a prefix or a suffix of them in x-order.
    """
    pts = ps.points
    n = len(pts)
    found = {(), tuple(range(n))}
    for i, j in combinations(range(n), 2):
        p, q = pts[i], pts[j]  # p left of q since points are x-sorted
        above, on = [], []
        for k in range(n):
            o = orientation(p, q, pts[k])
            if o > 0:
                above.append(k)
            elif o == 0:
                on.append(k)
        for cut in range(len(on) + 1):
            found.add(tuple(sorted(above + on[:cut])))
            found.add(tuple(sorted(above + on[cut:])))
    for i in range(n):
        level = pts[i][1]
        strictly = [k for k in range(n) if pts[k][1] > level]
        found.add(tuple(strictly))
        found.add(tuple(sorted(strictly + [k for k in range(n) if pts[k][1] == level])))
    return found


def gen_halfplane(ps: PointSet) -> PshpHypergraph:
    tops = upward_halfplane_sets(ps)
    full = set(range(len(ps)))
    bottoms = [tuple(sorted(full - set(t))) for t in tops]
    return PshpHypergraph.from_sides(len(ps), tops, bottoms)


def hull_boundary(ps: PointSet) -> tuple[set[int], set[int]]:
    """Points on the closed upper / lower convex hull, by brute force over point pairs."""
    pts = ps.points
    n = len(pts)
    upper, lower = set(range(n)), set(range(n))
    for a, b in combinations(range(n), 2):
        for k in range(a + 1, b):
            o = orientation(pts[a], pts[b], pts[k])
            if o < 0:
                upper.discard(k)
            elif o > 0:
                lower.discard(k)
    return upper, lower


K4_POINTS = ((0, 0), (1, 3), (2, 1), (4, 0))


def gen_k4() -> PshpHypergraph:
    full = gen_halfplane(PointSet.of(K4_POINTS))
    keep = [i for i, e in enumerate(full.edges) if len(e) == 2]
    return full.subfamily(keep)


def gen_h0(k: int) -> OrderedHypergraph:
    """3k vertices; edge (i, j) is the i-th block of k plus vertex (i+1)k + j mod 3k."""
    if k < 2:
        raise ValueError("k >= 2 required")
    n = 3 * k
    edges = []
    for i in range(3):
        block = list(range(i * k, i * k + k))
        for j in range(k):
            edges.append(block + [((i + 1) * k + j) % n])
    return canonicalize(edges, n)


def gen_all_subsets_minus_one(size: int) -> OrderedHypergraph:
    if size < 2:
        raise ValueError("size >= 2 required")
    return canonicalize(combinations(range(size), size - 1), size)


def gen_disjoint_blocks(counts: list[int]) -> OrderedHypergraph:
    if any(c < 1 for c in counts):
        raise ValueError("block sizes must be positive")
    edges, start = [], 0
    for c in counts:
        edges.append(range(start, start + c))
        start += c
    return canonicalize(edges, start)


def _compatible(mask: int, masks: list[int]) -> bool:
    return all(not aba_pattern(mask, other) and not aba_pattern(other, mask) for other in masks)


def gen_random_abafree(n: int, m: int, seed: int) -> tuple[OrderedHypergraph, bool]:
    """Uniform random subsets kept only while the family stays ABA-free.

    Gives up after ``50 * m`` draws; the flag is True when fewer than ``m``
    edges were collected.
    """
    if n < 1 or m < 0:
        raise ValueError("n >= 1 and m >= 0 required")
    rng = random.Random(seed)
    masks: list[int] = []
    for _ in range(50 * m):
        if len(masks) == m:
            break
        cand = rng.getrandbits(n)
        if cand in masks or not _compatible(cand, masks):
            continue
        masks.append(cand)
    edges = [[v for v in range(n) if mask >> v & 1] for mask in masks]
    return canonicalize(edges, n), len(masks) < m


def gen_random_pshp(n: int, m: int, seed: int) -> tuple[PshpHypergraph, bool]:
    """Random ABA-free witness F, then each member is used as a topset, as the
    complement of a bottomset, or both."""
    f, short = gen_random_abafree(n, m, seed)
    rng = random.Random(seed ^ 0x5EED)
    full = set(range(n))
    top, bottom = [], []
    for e in f.edges:
        roll = rng.random()
        if roll < 0.45 or roll >= 0.9:
            top.append(e)
        if roll >= 0.45:
            bottom.append(tuple(sorted(full - set(e))))
    return PshpHypergraph.from_sides(n, top, bottom), short


def random_point_set(n: int, rng: random.Random, span: int = 12, denominator: int = 3) -> PointSet:
    xs = rng.sample(range(span * denominator), n)
    coords = [(Fraction(x, denominator), Fraction(rng.randrange(span * denominator), denominator)) for x in xs]
    return PointSet.of(coords)


Crossing = "int | tuple[int, int]"


def crossing_span(c) -> tuple[int, int]:
    """(lowest track, number of pseudolines) of a crossing; a bare int is a 2-line swap."""
    if isinstance(c, int):
        return c, 2
    t, k = c
    return int(t), int(k)


@dataclass(frozen=True)
class WiringDiagram:
    """Pseudolines on tracks 0 (bottom) .. m-1. Each crossing reverses a block of
    adjacent tracks: ``t`` swaps tracks t and t+1, ``(t, k)`` reverses tracks
    t..t+k-1 at a single point."""

    m: int
    crossings: tuple
    sides: tuple[str, ...]

    def __post_init__(self):
        if len(self.sides) != self.m:
            raise ValidationError("one side per pseudoline is required")
        if any(s not in ("above", "below") for s in self.sides):
            raise ValidationError("sides must be 'above' or 'below'")
        tracks = list(range(self.m))
        seen = set()
        for c in self.crossings:
            t, k = crossing_span(c)
            if k < 2 or t < 0 or t + k > self.m:
                raise ValidationError(f"crossing {c} outside the {self.m} tracks")
            block = tracks[t:t + k]
            for pair in combinations(block, 2):
                pair = frozenset(pair)
                if pair in seen:
                    raise ValidationError(f"pseudolines {sorted(pair)} cross twice")
                seen.add(pair)
            tracks[t:t + k] = block[::-1]

    @property
    def crossed_pairs(self) -> int:
        return sum(k * (k - 1) // 2 for _, k in map(crossing_span, self.crossings))

    @property
    def is_simple_arrangement(self) -> bool:
        """Every pair crosses exactly once (not loose)."""
        return self.crossed_pairs == self.m * (self.m - 1) // 2


def wiring_faces(w: WiringDiagram) -> list[list[int]]:
    """Per face, in point order, the pseudolines lying strictly below it.

    Gap g of a column is the region between tracks g-1 and g. A crossing of
    tracks t..t+k-1 closes gaps t+1..t+k-1 and opens new faces there. Faces
    are ordered by the column they start in, then bottom to top.
    """
    tracks = list(range(w.m))  # tracks[t] = pseudoline on track t
    below_sets = [sorted(tracks[:g]) for g in range(w.m + 1)]
    for c in w.crossings:
        t, k = crossing_span(c)
        tracks[t:t + k] = tracks[t:t + k][::-1]
        below_sets.extend(sorted(tracks[:g]) for g in range(t + 1, t + k))
    return below_sets


def gen_from_wiring(w: WiringDiagram) -> PshpHypergraph:
    faces = wiring_faces(w)
    n = len(faces)
    top, bottom = [], []
    for line in range(w.m):
        above = [f for f, below in enumerate(faces) if line in below]
        if w.sides[line] == "above":
            top.append(above)
        else:
            bottom.append([f for f in range(n) if f not in above])
    try:
        return PshpHypergraph.from_sides(n, top, bottom)
    except ValidationError as exc:
        raise AssertionError(f"face bookkeeping produced a non-ABA-free witness: {exc}") from exc


def random_wiring(m: int, rng: random.Random, loose: float = 0.0) -> WiringDiagram:
    """Random arrangement by random adjacent swaps of out-of-order neighbours.

    With ``loose`` > 0 the process may stop early, leaving some pairs uncrossed.
    """
    tracks = list(range(m))
    crossings = []
    while True:
        swappable = [t for t in range(m - 1) if tracks[t] < tracks[t + 1]]
        if not swappable or (crossings and rng.random() < loose):
            break
        t = rng.choice(swappable)
        tracks[t], tracks[t + 1] = tracks[t + 1], tracks[t]
        crossings.append(t)
    sides = tuple(rng.choice(("above", "below")) for _ in range(m))
    return WiringDiagram(m, tuple(crossings), sides)


# Pappus configuration: A on y = 0, B on y = 1 + 2x, C the three cross joins.
# Collinearity of C is the incidence forced by the other eight.
PAPPUS_POINTS = (
    ("-2", "0"), ("1", "0"), ("6", "0"),
    ("-6", "-11"), ("0", "1"), ("2", "5"),
    ("36/31", "25/31"), ("-24", "-55/2"), ("12/5", "11/5"),
)
PAPPUS_FORCED = (6, 7, 8)


def dual_wiring(points, sides=None) -> tuple[WiringDiagram, list[int]]:
    """Wiring diagram of the lines y = a x - b dual to points (a, b).

    Slopes must be distinct and distinct concurrency points must have distinct
    abscissae. Returns the diagram and, per pseudoline (bottom-to-top order at
    the far left), the index of its point.
    """
    pts = [(Fraction(a), Fraction(b)) for a, b in points]
    if len({a for a, _ in pts}) != len(pts):
        raise ValidationError("dual lines must have distinct slopes")
    label = sorted(range(len(pts)), key=lambda i: -pts[i][0])  # steepest lowest at the far left
    line_of = {p: i for i, p in enumerate(label)}
    meets: dict[tuple[Fraction, Fraction], set[int]] = {}
    for i, j in combinations(range(len(pts)), 2):
        (a1, b1), (a2, b2) = pts[i], pts[j]
        x = (b1 - b2) / (a1 - a2)
        meets.setdefault((x, a1 * x - b1), set()).update((line_of[i], line_of[j]))
    xs = [x for x, _ in meets]
    if len(set(xs)) != len(xs):
        raise ValidationError("two crossing points share an abscissa")
    tracks = list(range(len(pts)))
    crossings = []
    for key in sorted(meets):
        lines = meets[key]
        pos = sorted(tracks.index(l) for l in lines)
        if pos != list(range(pos[0], pos[0] + len(pos))):
            raise AssertionError("concurrent lines are not on adjacent tracks")
        t, k = pos[0], len(pos)
        crossings.append(t if k == 2 else (t, k))
        tracks[t:t + k] = tracks[t:t + k][::-1]
    sides = tuple(sides) if sides else ("above",) * len(pts)
    return WiringDiagram(len(pts), tuple(crossings), sides), label


def non_pappus_wiring(sides=None, flip: bool = False) -> WiringDiagram:
    """Nine pseudolines: the Pappus line arrangement with the forced triple point
    pulled apart into three simple crossings (``flip`` picks which of the two
    resolutions). No straight-line arrangement has this crossing pattern."""
    w, label = dual_wiring(PAPPUS_POINTS, sides)
    forced = {label.index(i) for i in PAPPUS_FORCED}
    tracks = list(range(w.m))
    out = []
    for c in w.crossings:
        t, k = crossing_span(c)
        block = tracks[t:t + k]
        if k == 3 and set(block) == forced:
            out.extend((t + 1, t, t + 1) if flip else (t, t + 1, t))
        else:
            out.append(c)
        tracks[t:t + k] = block[::-1]
    return WiringDiagram(w.m, tuple(out), w.sides)


def gen_non_pappus(sides=None, flip: bool = False) -> PshpHypergraph:
    return gen_from_wiring(non_pappus_wiring(sides, flip))
