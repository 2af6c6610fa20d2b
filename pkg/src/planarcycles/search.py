"""Exhaustive small-order search, random planar inputs and the property harness."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable, Iterator, Optional

import numpy as np

from .constructions import h0, is_in_family
from .cycles import (
    CycleCountReport,
    count_induced_cycles,
    cycles_by_path,
    decomposition_from_cycles,
    is_forest,
    lemma_bounds,
    path_bound,
    path_counts_from,
)
from .graph import Graph, bits, from_edge_list, relabel
from .graph6 import graph6_decode, graph6_encode
from .planarity import euler_characteristics, is_planar
from .structure import find_good_6cycle, xyz_intersection

MAX_ENUM_ORDER = 7
MAX_CANON_ORDER = 8


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    perms = np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    ii = np.array([p[0] for p in pairs], dtype=np.int64)
    jj = np.array([p[1] for p in pairs], dtype=np.int64)
    flat = perms[:, ii] * n + perms[:, jj]
    weights = 1 << np.arange(len(pairs) - 1, -1, -1, dtype=np.int64)
    return perms, flat, weights


def canonical_form(g: Graph) -> Graph:
    """Relabelling of ``g`` with the lexicographically smallest graph6 string.

    Brute force over all ``n!`` orders, so only for ``n <= 8``.
    """
    n = g.n
    if n > MAX_CANON_ORDER:
        raise ValueError(f"canonical form is brute force; n <= {MAX_CANON_ORDER} only")
    if n <= 1:
        return g
    perms, flat, weights = _perm_tables(n)
    adj = np.array(g.adjacency_matrix(), dtype=np.int64).reshape(-1)
    codes = adj[flat] @ weights
    best = int(np.argmin(codes))
    p = perms[best]
    # new vertex i is old vertex p[i]
    inverse = [0] * n
    for i, old in enumerate(p):
        inverse[int(old)] = i
    return relabel(g, inverse)


def canonical_graph6(g: Graph) -> str:
    return graph6_encode(canonical_form(g))


def automorphism_count(g: Graph) -> int:
    """Number of vertex permutations fixing ``g`` (brute force, ``n <= 8``)."""
    n = g.n
    if n <= 1:
        return 1
    perms, flat, weights = _perm_tables(n)
    adj = np.array(g.adjacency_matrix(), dtype=np.int64).reshape(-1)
    codes = adj[flat] @ weights
    identity = int(adj[flat[0]] @ weights)
    return int(np.count_nonzero(codes == identity))


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def _planar_classes(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class of planar graphs on ``n`` vertices."""
    level = {graph6_encode(from_edge_list(1, [])): from_edge_list(1, [])}
    for order in range(2, n + 1):
        nxt: dict[str, Graph] = {}
        for parent in level.values():
            for nbrs in range(1 << (order - 1)):
                rows = [r | ((nbrs >> v & 1) << (order - 1)) for v, r in enumerate(parent.rows)]
                rows.append(nbrs)
                child = Graph(order, tuple(rows))
                key = canonical_graph6(child)
                if key not in nxt:
                    nxt[key] = child
        level = {}
        for key in sorted(nxt):
            # planarity is hereditary, so planar parents suffice
            if is_planar(nxt[key]).planar:
                level[key] = graph6_decode(key)
    return list(level.values())


def enumerate_planar(n: int, unique: bool = True) -> Iterator[Graph]:
    """Every planar graph on ``n <= 7`` vertices.

    With ``unique`` (default) one canonical representative per isomorphism
    class is produced, in graph6 order; otherwise every labelled graph is
    tested, which is slow at ``n = 7``.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if n > MAX_ENUM_ORDER:
        raise ValueError(f"internal enumeration stops at n = {MAX_ENUM_ORDER}; supply an external graph6 stream")
    if unique:
        yield from _planar_classes(n)
        return
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for code in range(1 << len(pairs)):
        g = from_edge_list(n, [pairs[k] for k in range(len(pairs)) if code >> k & 1])
        if is_planar(g).planar:
            yield g


# ---------------------------------------------------------------------------
# extremal search
# ---------------------------------------------------------------------------


@dataclass
class SearchReport:
    n: int
    graphs_seen: int = 0
    nonplanar_rejected: int = 0
    empirical_max: int = -1
    argmax: list[str] = field(default_factory=list)
    formula_value: Optional[int] = None
    equality: Optional[bool] = None
    argmax_in_family: list[bool] = field(default_factory=list)
    complete: bool = False
    canonical: bool = True

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "graphs_seen": self.graphs_seen,
            "nonplanar_rejected": self.nonplanar_rejected,
            "empirical_max": self.empirical_max,
            "argmax": self.argmax,
            "formula_value": self.formula_value,
            "equality": self.equality,
            "argmax_in_family": self.argmax_in_family,
            "complete": self.complete,
            "canonical": self.canonical,
        }


def _score(g: Graph) -> tuple[bool, int, str]:
    if not is_planar(g).planar:
        return False, -1, ""
    total = count_induced_cycles(g, 6).total
    key = canonical_graph6(g) if g.n <= MAX_CANON_ORDER else graph6_encode(g)
    return True, total, key


def _score_text(text: str) -> tuple[bool, int, str]:
    return _score(graph6_decode(text))


def max_induced_6cycles(
    stream: Iterable[Graph],
    n: int,
    jobs: int = 1,
    complete: bool = False,
) -> SearchReport:
    """Largest number of induced 6-cycles over the planar graphs of a stream.

    Every graph must have order ``n``; non-planar ones are counted and
    skipped. All maximisers are kept (deduplicated up to isomorphism when
    ``n <= 8``) and checked for family membership.
    """
    report = SearchReport(n, complete=complete, canonical=n <= MAX_CANON_ORDER)

    def checked() -> Iterator[Graph]:
        for g in stream:
            if g.n != n:
                raise ValueError(f"stream contains a graph of order {g.n}, expected {n}")
            yield g

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            scores = list(pool.map(_score_text, (graph6_encode(g) for g in checked()), chunksize=64))
    else:
        scores = map(_score, checked())
    best: set[str] = set()
    for planar, total, key in scores:
        report.graphs_seen += 1
        if not planar:
            report.nonplanar_rejected += 1
            continue
        if total > report.empirical_max:
            report.empirical_max = total
            best = {key}
        elif total == report.empirical_max:
            best.add(key)
    report.argmax = sorted(best)
    if n >= 6:
        report.formula_value = h0(n)
        if report.empirical_max >= 0:
            report.equality = report.empirical_max == report.formula_value
    report.argmax_in_family = [is_in_family(graph6_decode(s)).member for s in report.argmax]
    return report


# ---------------------------------------------------------------------------
# random planar graphs
# ---------------------------------------------------------------------------


def random_planar(n: int, seed: int, target_m: Optional[int] = None) -> Graph:
    """Random planar graph: stacked triangulation by vertex insertion, then uniform edge deletion.

    Labels are shuffled. Deterministic for a given ``(n, seed, target_m)``.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    max_m = 3 * n - 6 if n >= 3 else 0
    if target_m is None:
        target_m = max_m
    if not 0 <= target_m <= max_m:
        raise ValueError(f"target edge count {target_m} not in 0..{max_m}")
    rng = random.Random(seed)
    faces = [(0, 1, 2), (0, 2, 1)]
    edges = {(0, 1), (1, 2), (0, 2)}
    for v in range(3, n):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        faces[i] = (a, b, v)
        faces += [(b, c, v), (c, a, v)]
        edges |= {(min(x, v), max(x, v)) for x in (a, b, c)}
    labels = list(range(n))
    rng.shuffle(labels)
    kept = rng.sample(sorted(edges), target_m)
    return from_edge_list(n, [(labels[a], labels[b]) for a, b in kept])


# ---------------------------------------------------------------------------
# property harness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PropertyViolation:
    property: str
    graph6: str
    details: dict

    def to_dict(self) -> dict:
        return {"property": self.property, "graph6": self.graph6, "details": self.details}


@dataclass
class _Context:
    g: Graph
    report: CycleCountReport
    max_path_len: int
    _index: Optional[dict] = None

    @property
    def index(self) -> dict:
        if self._index is None:
            self._index = cycles_by_path(self.report.cycles)
        return self._index


def _prop_euler(ctx: _Context) -> list[dict]:
    res = is_planar(ctx.g)
    return [{"component_euler": chi} for chi in euler_characteristics(res.embedding, ctx.g) if chi != 2]


def _prop_edge_bound(ctx: _Context) -> list[dict]:
    g = ctx.g
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return [{"m": g.m, "bound": 3 * g.n - 6}]
    return []


def _prop_count_consistency(ctx: _Context) -> list[dict]:
    r = ctx.report
    out = []
    sv = sum(r.per_vertex)
    se = sum(r.per_edge.values())
    if sv != 6 * r.total:
        out.append({"sum_per_vertex": sv, "total": r.total})
    if se != 6 * r.total:
        out.append({"sum_per_edge": se, "total": r.total})
    centred = [0] * ctx.g.n
    for (u, v, w), cycles in ctx.index.items():
        centred[v] += len(cycles)
    for v in range(ctx.g.n):
        # unordered paths u v w; ordered ones would give twice this
        if centred[v] != r.per_vertex[v]:
            out.append({"vertex": v, "path_sum": centred[v], "per_vertex": r.per_vertex[v]})
    return out


def _prop_path_forests(ctx: _Context) -> list[dict]:
    g = ctx.g
    out = []
    for (u, v, w), cycles in sorted(ctx.index.items()):
        d = decomposition_from_cycles(g, u, v, w, cycles)
        detail = {"path": [u, v, w]}
        if not is_forest(d.G1):
            out.append({**detail, "issue": "G1 has a cycle"})
        if not is_forest(d.G2):
            out.append({**detail, "issue": "G2 has a cycle"})
        if len(cycles) > min(lemma_bounds(d)):
            out.append({**detail, "issue": "count exceeds bound", "count": len(cycles), "bounds": list(lemma_bounds(d))})
        g1a = {a for a, _ in d.G1}
        g1b = {b for _, b in d.G1}
        g2b = {b for b, _ in d.G2}
        g2c = {c for _, c in d.G2}
        if g1a != d.X1 or g1b != d.X2 or g2b != d.X2 or g2c != d.X3:
            out.append({**detail, "issue": "X-set without neighbour in adjacent level"})
        rows = g.rows
        for x in d.X1:
            if not rows[u] >> x & 1 or rows[w] >> x & 1:
                out.append({**detail, "issue": "X1 adjacency", "vertex": x})
        for x in d.X3:
            if not rows[w] >> x & 1 or rows[u] >> x & 1:
                out.append({**detail, "issue": "X3 adjacency", "vertex": x})
        for x in d.X2:
            if (rows[u] | rows[w]) >> x & 1:
                out.append({**detail, "issue": "X2 adjacency", "vertex": x})
    return out


def _prop_xyz_bound(ctx: _Context) -> list[dict]:
    out = []
    for c in find_good_6cycle(ctx.g, ctx.report):
        inter = xyz_intersection(ctx.g, c, ctx.report, ctx.index, validate=False)
        if len(inter) > 8:
            out.append({**c.to_dict(), "intersection": sorted(inter)})
    return out


def _prop_path_bound(ctx: _Context) -> list[dict]:
    g = ctx.g
    if g.n < 3:
        return []
    bounds = [path_bound(g.n, i) for i in range(ctx.max_path_len + 1)]
    out = []
    for u in range(g.n):
        counts = path_counts_from(g, u, ctx.max_path_len)
        for i in range(1, ctx.max_path_len + 1):
            row = counts[i]
            for w in range(u + 1, g.n):
                if row[w] > bounds[i]:
                    out.append({"u": u, "w": w, "length": i, "paths": row[w], "bound": bounds[i]})
    return out


PROPERTIES: dict[str, Callable[[_Context], list[dict]]] = {
    "euler": _prop_euler,
    "edge_bound": _prop_edge_bound,
    "count_consistency": _prop_count_consistency,
    "path_forests": _prop_path_forests,
    "xyz_bound": _prop_xyz_bound,
    "path_bound": _prop_path_bound,
}


def property_suite(
    g: Graph,
    report: Optional[CycleCountReport] = None,
    properties: Optional[Iterable[str]] = None,
    max_path_len: int = 6,
) -> list[PropertyViolation]:
    """Run the registered properties on a planar graph; an empty list means all hold.

    ``report`` may be supplied (it must carry its cycles); it is trusted as
    the object under test.
    """
    if not is_planar(g).planar:
        raise ValueError("property suite needs a planar graph")
    if report is None or report.cycles is None:
        report = count_induced_cycles(g, 6, keep_cycles=True)
    ctx = _Context(g, report, max_path_len)
    names = list(PROPERTIES) if properties is None else list(properties)
    code = graph6_encode(g)
    out = []
    for name in names:
        for detail in PROPERTIES[name](ctx):
            out.append(PropertyViolation(name, code, detail))
    return out


def _suite_text(args: tuple[str, int]) -> list[dict]:
    text, max_path_len = args
    return [v.to_dict() for v in property_suite(graph6_decode(text), max_path_len=max_path_len)]


def property_suite_many(graphs: Iterable[Graph], jobs: int = 1, max_path_len: int = 6) -> list[list[dict]]:
    """Property suite over many graphs; results come back in input order."""
    texts = [(graph6_encode(g), max_path_len) for g in graphs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_suite_text, texts, chunksize=8))
    return [_suite_text(t) for t in texts]


def fuzz_corpus(count: int = 1000, max_n: int = 40, seed: int = 0) -> list[Graph]:
    """Seeded corpus of random planar graphs with mixed orders and densities."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(6, max_n)
        lo, hi = n - 1, 3 * n - 6
        m = rng.randint(lo, hi)
        out.append(random_planar(n, seed * 1_000_003 + i, m))
    return out
