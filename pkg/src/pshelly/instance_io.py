"""JSON instance files.

One JSON object per file, keys in a fixed order, newline-terminated::

    {"kind": "aba", "n": 3, "edges": [[0, 1], [1, 2]]}
    {"kind": "pshp", "n": 4, "top": [...], "bottom": [...], "points": [["0", "0"], ...]}
    {"kind": "dual_pshp", "n": 3, "F": [[0, 1]], "X": [2], "flags": ["straight"]}

``plain`` files carry any hypergraph, ``aba`` files must be ABA-free,
``pshp`` files must have an ABA-free witness, ``dual_pshp`` files only
straight flags, ``hemi`` files any flags. Optional trailing keys are
``points``, ``seed``, ``meta`` and ``certificate``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .core import OrderedHypergraph, ValidationError, canonicalize, is_aba_free
from .helly import DeltaHypergraph, Flag
from .structure import PshpHypergraph

KINDS = ("plain", "aba", "pshp", "dual_pshp", "hemi")
REQUIRED = {
    "plain": ("edges",),
    "aba": ("edges",),
    "pshp": ("top", "bottom"),
    "dual_pshp": ("F", "X", "flags"),
    "hemi": ("F", "X", "flags"),
}
OPTIONAL = ("points", "seed", "meta", "certificate")


@dataclass
class Instance:
    kind: str
    obj: Any  # OrderedHypergraph | PshpHypergraph | DeltaHypergraph
    points: list[tuple[Fraction, Fraction]] | None = None
    meta: dict = field(default_factory=dict)
    certificate: dict | None = None
    seed: int | None = None

    @property
    def n(self) -> int:
        return self.obj.n

    @property
    def hypergraph(self) -> OrderedHypergraph:
        if isinstance(self.obj, PshpHypergraph):
            return self.obj.base
        if isinstance(self.obj, DeltaHypergraph):
            return self.obj.derived
        return self.obj


def _edge_list(value, name: str) -> list[list[int]]:
    if not isinstance(value, list) or not all(isinstance(e, list) for e in value):
        raise ValidationError(f"field '{name}': expected a list of integer lists")
    for i, e in enumerate(value):
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in e):
            raise ValidationError(f"field '{name}[{i}]': members must be integers")
    return value


def from_dict(data: dict) -> Instance:
    if not isinstance(data, dict):
        raise ValidationError("top level: expected a JSON object")
    kind = data.get("kind")
    if kind not in KINDS:
        raise ValidationError(f"field 'kind': expected one of {', '.join(KINDS)}, got {kind!r}")
    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValidationError("field 'n': expected a non-negative integer")
    allowed = {"kind", "n", *REQUIRED[kind], *OPTIONAL}
    extra = sorted(set(data) - allowed)
    if extra:
        raise ValidationError(f"field '{extra[0]}': not allowed for kind '{kind}'")
    for key in REQUIRED[kind]:
        if key not in data:
            raise ValidationError(f"field '{key}': required for kind '{kind}'")

    if kind in ("plain", "aba"):
        obj = canonicalize(_edge_list(data["edges"], "edges"), n)
        if kind == "aba":
            verdict = is_aba_free(obj)
            if not verdict:
                i, j, x, y, z = verdict.witness
                raise ValidationError(
                    f"not ABA-free: A={list(obj.edges[i])} B={list(obj.edges[j])} x={x} y={y} z={z}",
                    witness=verdict.witness,
                )
    elif kind == "pshp":
        obj = PshpHypergraph.from_sides(n, _edge_list(data["top"], "top"), _edge_list(data["bottom"], "bottom"))
    else:
        f = _edge_list(data["F"], "F")
        x = data["X"]
        if not isinstance(x, list) or not all(isinstance(v, int) for v in x):
            raise ValidationError("field 'X': expected a list of integers")
        flags = data["flags"]
        if not isinstance(flags, list) or any(fl not in [e.value for e in Flag] for fl in flags):
            raise ValidationError("field 'flags': expected 'straight', 'complemented' or 'both' entries")
        obj = DeltaHypergraph.build(n, f, x, flags)
        if kind == "dual_pshp" and not obj.is_dual_pshp:
            raise ValidationError("field 'flags': dual_pshp instances use only 'straight'")

    points = None
    if "points" in data:
        try:
            points = [(Fraction(px), Fraction(py)) for px, py in data["points"]]
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"field 'points': {exc}") from exc
        if len(points) != n:
            raise ValidationError("field 'points': one point per vertex required")
    meta = data.get("meta", {})
    if not isinstance(meta, dict):
        raise ValidationError("field 'meta': expected an object")
    seed = data.get("seed")
    if seed is not None and (not isinstance(seed, int) or isinstance(seed, bool)):
        raise ValidationError("field 'seed': expected an integer")
    return Instance(kind, obj, points, meta, data.get("certificate"), seed)


def to_dict(inst: Instance) -> dict:
    out: dict[str, Any] = {"kind": inst.kind, "n": inst.n}
    obj = inst.obj
    if isinstance(obj, PshpHypergraph):
        out["top"] = [list(e) for e in obj.tops]
        out["bottom"] = [list(e) for e in obj.bottoms]
    elif isinstance(obj, DeltaHypergraph):
        out["F"] = obj.f.as_lists()
        out["X"] = sorted(obj.x)
        out["flags"] = [fl.value for fl in obj.flags]
    else:
        out["edges"] = obj.as_lists()
    if inst.points is not None:
        out["points"] = [[str(px), str(py)] for px, py in inst.points]
    if inst.seed is not None:
        out["seed"] = inst.seed
    if inst.meta:
        out["meta"] = {k: inst.meta[k] for k in sorted(inst.meta)}
    if inst.certificate is not None:
        out["certificate"] = inst.certificate
    return out


def loads(text: str) -> Instance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return from_dict(data)


def dumps(inst: Instance) -> str:
    return json.dumps(to_dict(inst)) + "\n"


def wrap(obj, **kw) -> Instance:
    """Instance with the natural kind for ``obj``."""
    if isinstance(obj, PshpHypergraph):
        kind = "pshp"
    elif isinstance(obj, DeltaHypergraph):
        kind = "dual_pshp" if obj.is_dual_pshp else "hemi"
    else:
        kind = "aba" if is_aba_free(obj) else "plain"
    return Instance(kind, obj, **kw)
