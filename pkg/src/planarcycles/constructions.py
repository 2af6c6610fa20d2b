"""Blow-up constructions of cycles, the extremal family for induced 6-cycles,
and the closed-form counts attached to it.

Labelling convention for ``gen_F(n, m)``: the base cycle has slots
``c_0 .. c_{m-1}``; the odd slots ``c_1, c_3, ..., c_{2*(m//2)-1}`` are blown up.
Unblown slots get labels ``0 .. m - m//2 - 1`` in slot order, then the classes
follow one after another, each listed along its (possible) internal path. For
``m = 6`` this gives hubs ``u1, u2, u3 = 0, 1, 2`` and classes ``A, B, C`` where
``A`` sits between ``u1`` and ``u2``, ``B`` between ``u2`` and ``u3`` and ``C``
between ``u3`` and ``u1``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence, Union

from .graph import Graph, VertexSet, bits, from_edge_list, mask_of
from .planarity import Embedding


def class_sizes(total: int, parts: int) -> list[int]:
    """Split ``total`` into ``parts`` near-equal sizes, larger ones first."""
    q, r = divmod(total, parts)
    return [q + 1] * r + [q] * (parts - r)


@dataclass(frozen=True)
class BlowupLayout:
    n: int
    m: int
    hubs: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    # (slot, vertex-or-class) in cycle order; class entries are ("class", i)
    slots: tuple[tuple[str, int], ...]
    positions: tuple[tuple[float, float], ...] = field(repr=False)

    def class_between(self, i: int) -> tuple[int, int]:
        """The two unblown cycle vertices adjacent to every vertex of class ``i``."""
        m = self.m
        idx = next(s for s, entry in enumerate(self.slots) if entry == ("class", i))
        left = self.slots[(idx - 1) % m]
        right = self.slots[(idx + 1) % m]
        return left[1], right[1]


def blowup_layout(n: int, m: int) -> BlowupLayout:
    if m < 3:
        raise ValueError("base cycle length must be at least 3")
    if n < m:
        raise ValueError(f"need n >= m, got n={n}, m={m}")
    blown = m // 2
    nhubs = m - blown
    sizes = class_sizes(n - nhubs, blown)
    slots: list[tuple[str, int]] = []
    hub_label = 0
    class_idx = 0
    for s in range(m):
        if s % 2 == 1 and class_idx < blown:
            slots.append(("class", class_idx))
            class_idx += 1
        else:
            slots.append(("hub", hub_label))
            hub_label += 1
    classes = []
    nxt = nhubs
    for size in sizes:
        classes.append(tuple(range(nxt, nxt + size)))
        nxt += size

    # straight-line drawing: base cycle on a regular polygon, each class spread
    # from its slot towards the chord joining the two neighbouring slots
    corner = [(math.cos(math.pi / 2 - 2 * math.pi * s / m), math.sin(math.pi / 2 - 2 * math.pi * s / m)) for s in range(m)]
    pos: list[tuple[float, float]] = [(0.0, 0.0)] * n
    for s, (kind, ident) in enumerate(slots):
        if kind == "hub":
            pos[ident] = corner[s]
            continue
        px, py = corner[s]
        (ax, ay), (bx, by) = corner[s - 1], corner[(s + 1) % m]
        mx, my = (ax + bx) / 2, (ay + by) / 2
        members = classes[ident]
        for j, v in enumerate(members):
            t = 0.9 * j / len(members)
            pos[v] = (px + t * (mx - px), py + t * (my - py))
    return BlowupLayout(n, m, tuple(range(nhubs)), tuple(classes), tuple(slots), tuple(pos))


def _layout_edges(layout: BlowupLayout, intra: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    m = layout.m
    edges = []
    members = [((v,) if kind == "hub" else layout.classes[v]) for kind, v in layout.slots]
    for s in range(m):
        for a in members[s]:
            for b in members[(s + 1) % m]:
                edges.append((a, b))
    for cls, positions in zip(layout.classes, intra):
        for i in positions:
            edges.append((cls[i], cls[i + 1]))
    return edges


def _straight_line_embedding(g: Graph, pos: Sequence[tuple[float, float]]) -> Embedding:
    rotation = []
    for v in range(g.n):
        x, y = pos[v]
        nbrs = sorted(bits(g.rows[v]), key=lambda w: -math.atan2(pos[w][1] - y, pos[w][0] - x))
        rotation.append(tuple(nbrs))
    return Embedding(tuple(rotation))


Selector = Union[None, str, Sequence[Sequence[int]]]


def _resolve_selector(layout: BlowupLayout, intra: Selector) -> list[list[int]]:
    nclasses = len(layout.classes)
    if intra is None or intra == "none":
        return [[] for _ in range(nclasses)]
    if intra == "all":
        return [list(range(len(c) - 1)) for c in layout.classes]
    if isinstance(intra, str):
        raise ValueError(f"unknown selector {intra!r}")
    chosen = [sorted(set(p)) for p in intra]
    if len(chosen) != nclasses:
        raise ValueError(f"selector needs {nclasses} per-class entries, got {len(chosen)}")
    for ci, (cls, positions) in enumerate(zip(layout.classes, chosen)):
        for i in positions:
            if not 0 <= i < len(cls) - 1:
                raise ValueError(f"class {ci} has no consecutive pair at position {i}")
    return chosen


def build_blowup(n: int, m: int, intra: Selector) -> tuple[Graph, Embedding, BlowupLayout]:
    layout = blowup_layout(n, m)
    chosen = _resolve_selector(layout, intra)
    g = from_edge_list(n, _layout_edges(layout, chosen))
    return g, _straight_line_embedding(g, layout.positions), layout


def gen_F(n: int, m: int) -> tuple[Graph, Embedding]:
    """The ``m``-cycle with ``m//2`` pairwise non-adjacent vertices blown up to near-equal classes."""
    g, emb, _ = build_blowup(n, m, None)
    return g, emb


def gen_Fprime(n: int, m: int) -> tuple[Graph, Embedding]:
    """``gen_F(n, m)`` plus a path through each blown-up class."""
    g, emb, _ = build_blowup(n, m, "all")
    return g, emb


def gen_family_member(n: int, intra: Selector = None) -> Graph:
    """A member of the extremal family on ``n`` vertices.

    ``intra`` is ``None``/``"none"``, ``"all"``, or three collections of
    positions; position ``i`` in a class adds the edge between its ``i``-th and
    ``(i+1)``-th vertex.
    """
    if n < 6:
        raise ValueError("the family is defined for n >= 6")
    return build_blowup(n, 6, intra)[0]


def gen_family_member_embedded(n: int, intra: Selector = None) -> tuple[Graph, Embedding]:
    if n < 6:
        raise ValueError("the family is defined for n >= 6")
    g, emb, _ = build_blowup(n, 6, intra)
    return g, emb


def random_selector(n: int, rng: random.Random, p: float = 0.5) -> list[list[int]]:
    """Pick each allowed intra-class edge of the family on ``n`` vertices with probability ``p``."""
    return [[i for i in range(s - 1) if rng.random() < p] for s in class_sizes(n - 3, 3)]


def parse_selector(text: str) -> Selector:
    """Parse ``none``, ``all`` or ``"0,2;;1"`` (per-class positions separated by ``;``)."""
    text = text.strip()
    if text in ("none", "all"):
        return text
    parts = text.split(";")
    try:
        return [[int(x) for x in p.split(",") if x.strip()] for p in parts]
    except ValueError:
        raise ValueError(f"bad selector {text!r}") from None


def _check_order(n: int) -> None:
    if n < 6:
        raise ValueError(f"formula defined for n >= 6, got {n}")


def h0(n: int) -> int:
    """Number of induced 6-cycles in every member of the family on ``n`` vertices."""
    _check_order(n)
    r = n % 3
    if r == 0:
        return (n // 3 - 1) ** 3
    if r == 1:
        return ((n - 4) // 3) ** 2 * ((n - 1) // 3)
    return ((n - 2) // 3) ** 2 * ((n - 5) // 3)


def h1(n: int) -> int:
    """Fewest induced 6-cycles through a single vertex of a family member."""
    _check_order(n)
    r = n % 3
    if r == 0:
        return (n // 3 - 1) ** 2
    if r == 1:
        return ((n - 4) // 3) ** 2
    return ((n - 2) // 3) * ((n - 5) // 3)


def fi_formula(n: int) -> int:
    """Closed form for the maximum number of induced 6-cycles in an ``n``-vertex planar graph (large ``n``)."""
    return h0(n)


@dataclass(frozen=True)
class FormulaTable:
    n: int
    h0: int
    h1: int
    fi: int

    @classmethod
    def at(cls, n: int) -> FormulaTable:
        return cls(n, h0(n), h1(n), fi_formula(n))

    def to_dict(self) -> dict:
        return {"n": self.n, "h0": self.h0, "h1": self.h1, "fi": self.fi}


@dataclass(frozen=True)
class FamilyReport:
    member: bool
    hubs: Optional[tuple[int, int, int]] = None
    classes: Optional[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]] = None
    intra_edges: tuple[tuple[int, int], ...] = ()
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "member": self.member,
            "hubs": list(self.hubs) if self.hubs else None,
            "classes": {name: list(c) for name, c in zip("ABC", self.classes)} if self.classes else None,
            "intra_edges": [list(e) for e in self.intra_edges],
            "reason": self.reason,
        }


def _path_order(g: Graph, cls: int) -> Optional[list[int]]:
    """Order the vertices of ``cls`` so its internal edges join consecutive entries.

    Returns ``None`` if the induced subgraph is not a disjoint union of paths.
    """
    rows = g.rows
    order: list[int] = []
    seen = 0
    for v in bits(cls):
        if (rows[v] & cls).bit_count() > 2:
            return None
    for start in bits(cls):
        if seen >> start & 1 or (rows[start] & cls).bit_count() == 2:
            continue
        prev, cur = -1, start
        while True:
            order.append(cur)
            seen |= 1 << cur
            nxt = [x for x in bits(rows[cur] & cls) if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
    if seen != cls:
        # leftover vertices all have degree 2 inside the class: a cycle
        return None
    return order


def _check_hubs(g: Graph, hubs: tuple[int, int, int]) -> tuple[Optional[FamilyReport], str]:
    rows = g.rows
    hub_mask = mask_of(hubs)
    for x, y in combinations(hubs, 2):
        if g.has_edge(x, y):
            return None, f"hubs {x} and {y} are adjacent"
    u1, u2, u3 = hubs
    pairs = {mask_of((u1, u2)): 0, mask_of((u2, u3)): 1, mask_of((u3, u1)): 2}
    masks = [0, 0, 0]
    for r in range(g.n):
        if hub_mask >> r & 1:
            continue
        idx = pairs.get(rows[r] & hub_mask)
        if idx is None:
            return None, f"vertex {r} is not adjacent to exactly two hubs"
        masks[idx] |= 1 << r
    sizes = [c.bit_count() for c in masks]
    if max(sizes) - min(sizes) > 1:
        return None, f"class sizes {sizes} are not as equal as possible"
    orders = []
    for idx, cls in enumerate(masks):
        for v in bits(cls):
            if rows[v] & ~hub_mask & ~cls:
                return None, f"vertex {v} has a neighbour in another class"
        order = _path_order(g, cls)
        if order is None:
            return None, f"edges inside class {'ABC'[idx]} do not form a union of paths"
        orders.append(tuple(order))
    intra = tuple((a, b) for cls in masks for a in bits(cls) for b in bits(rows[a] & cls) if a < b)
    return FamilyReport(True, hubs, tuple(orders), intra), ""


def is_in_family(g: Graph) -> FamilyReport:
    """Decide membership in the extremal family, returning a witness labelling."""
    n = g.n
    if n < 6:
        return FamilyReport(False, reason="family needs at least 6 vertices")
    base = 2 * (n - 3)
    if not base <= g.m <= base + n - 6:
        return FamilyReport(False, reason=f"edge count {g.m} outside {base}..{base + n - 6}")
    min_hub_degree = 2 * ((n - 3) // 3)
    candidates = [v for v in range(n) if g.degree(v) >= min_hub_degree]
    last_reason = "fewer than three candidate hubs"
    for triple in combinations(candidates, 3):
        report, reason = _check_hubs(g, triple)
        if report is not None:
            return report
        last_reason = reason
    return FamilyReport(False, reason=f"no hub triple works (last tried: {last_reason})")
