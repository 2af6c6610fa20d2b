"""Induced cycle enumeration, path-centred decompositions and simple-path counts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .graph import Graph, VertexSet, bits, mask_of

MIN_K = 3
MAX_K = 12
MAX_PATH_LEN = 8

Cycle = tuple[int, ...]


@dataclass(frozen=True)
class CycleCountReport:
    k: int
    total: int
    per_vertex: tuple[int, ...]
    per_edge: dict[tuple[int, int], int]
    cycles: Optional[tuple[Cycle, ...]] = field(default=None, compare=False, repr=False)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "total": self.total,
            "per_vertex": list(self.per_vertex),
            "per_edge": [[u, v, c] for (u, v), c in sorted(self.per_edge.items())],
        }


def _check_k(k: int) -> None:
    if not MIN_K <= k <= MAX_K:
        raise ValueError(f"cycle length must be in {MIN_K}..{MAX_K}, got {k}")


def _complete(rows: tuple[int, ...], path: list[int], k: int, allowed: int, last_min: int) -> Iterator[Cycle]:
    """Extend the induced path ``path`` to induced ``k``-cycles.

    New vertices are drawn from ``allowed``; the final vertex must exceed
    ``last_min``. The path's own inducedness is the caller's responsibility.
    """
    first_row = rows[path[0]]
    visited = mask_of(path)
    # neighbours of path[1..-2]; a new vertex may touch only the current end
    block = 0
    for v in path[1:-1]:
        block |= rows[v]
    if len(path) == k:
        if first_row >> path[-1] & 1 and path[-1] > last_min:
            yield tuple(path)
        return

    def rec(last: int, block: int, visited: int) -> Iterator[Cycle]:
        j = len(path)
        cands = rows[last] & allowed & ~visited & ~block
        if j < k - 1:
            cands &= ~first_row
            nblock = block | rows[last]
            for x in bits(cands):
                path.append(x)
                yield from rec(x, nblock, visited | 1 << x)
                path.pop()
        else:
            cands &= first_row & ~((1 << (last_min + 1)) - 1)
            for x in bits(cands):
                path.append(x)
                yield tuple(path)
                path.pop()

    yield from rec(path[-1], block, visited)


def iter_induced_cycles(g: Graph, k: int) -> Iterator[Cycle]:
    """Yield every induced ``k``-cycle once, as a vertex sequence.

    Each cycle starts at its smallest vertex and is oriented so that the
    second vertex is smaller than the last.
    """
    _check_k(k)
    rows = g.rows
    full = (1 << g.n) - 1
    for s in range(g.n):
        higher = full & ~((1 << (s + 1)) - 1)
        for p1 in bits(rows[s] & higher):
            yield from _complete(rows, [s, p1], k, higher, p1)


def count_induced_cycles(g: Graph, k: int, keep_cycles: bool = False) -> CycleCountReport:
    """Count induced ``k``-cycles in total, per vertex and per edge."""
    per_vertex = [0] * g.n
    per_edge = dict.fromkeys(g.edges(), 0)
    kept = [] if keep_cycles else None
    total = 0
    for cyc in iter_induced_cycles(g, k):
        total += 1
        prev = cyc[-1]
        for v in cyc:
            per_vertex[v] += 1
            per_edge[(prev, v) if prev < v else (v, prev)] += 1
            prev = v
        if kept is not None:
            kept.append(cyc)
    return CycleCountReport(k, total, tuple(per_vertex), per_edge, None if kept is None else tuple(kept))


def _check_path(g: Graph, u: int, v: int, w: int) -> None:
    if u == w:
        raise ValueError("path endpoints must differ")
    if not g.has_edge(u, v) or not g.has_edge(v, w):
        raise ValueError(f"{u}-{v}-{w} is not a path in the graph")


def iter_cycles_through_path(g: Graph, u: int, v: int, w: int, k: int) -> Iterator[Cycle]:
    """Yield induced ``k``-cycles containing the path ``u v w``, as ``(u, v, w, ...)``."""
    _check_k(k)
    _check_path(g, u, v, w)
    if g.has_edge(u, w):
        if k == 3:
            yield (u, v, w)
        return
    yield from _complete(g.rows, [u, v, w], k, (1 << g.n) - 1, -1)


def induced_cycles_through_path(g: Graph, u: int, v: int, w: int, k: int, return_cycles: bool = False):
    """Number of induced ``k``-cycles containing ``u v w`` consecutively.

    With ``return_cycles=True`` the list of cycles is returned instead.
    """
    cycles = list(iter_cycles_through_path(g, u, v, w, k))
    return cycles if return_cycles else len(cycles)


@dataclass(frozen=True)
class XDecomposition:
    """Vertices on induced 6-cycles through ``u v w``, split by adjacency to the ends.

    ``G1`` lists the graph edges between ``X1`` and ``X2`` as ``(x1, x2)``;
    ``G2`` the edges between ``X2`` and ``X3`` as ``(x2, x3)``.
    """

    u: int
    v: int
    w: int
    X: VertexSet
    X1: VertexSet
    X2: VertexSet
    X3: VertexSet
    G1: tuple[tuple[int, int], ...]
    G2: tuple[tuple[int, int], ...]
    n_cycles: int

    def to_dict(self) -> dict:
        return {
            "path": [self.u, self.v, self.w],
            "X1": sorted(self.X1),
            "X2": sorted(self.X2),
            "X3": sorted(self.X3),
            "G1": [list(e) for e in self.G1],
            "G2": [list(e) for e in self.G2],
            "cycles": self.n_cycles,
        }


def decomposition_from_cycles(g: Graph, u: int, v: int, w: int, cycles: list[Cycle]) -> XDecomposition:
    """Build the decomposition from the 6-cycles ``(u, v, w, x3, x2, x1)`` through the path."""
    x1 = x2 = x3 = 0
    for cyc in cycles:
        x3 |= 1 << cyc[3]
        x2 |= 1 << cyc[4]
        x1 |= 1 << cyc[5]
    rows = g.rows
    g1 = tuple((a, b) for a in bits(x1) for b in bits(rows[a] & x2))
    g2 = tuple((b, c) for b in bits(x2) for c in bits(rows[b] & x3))
    s1, s2, s3 = frozenset(bits(x1)), frozenset(bits(x2)), frozenset(bits(x3))
    return XDecomposition(u, v, w, s1 | s2 | s3, s1, s2, s3, g1, g2, len(cycles))


def x_decomposition(g: Graph, u: int, v: int, w: int) -> XDecomposition:
    cycles = list(iter_cycles_through_path(g, u, v, w, 6))
    return decomposition_from_cycles(g, u, v, w, cycles)


def lemma_bounds(d: XDecomposition) -> tuple[int, int]:
    """Upper bounds on 6-cycles through the path from the forest structure of G1 and G2."""
    a, b, c = len(d.X1), len(d.X2), len(d.X3)
    if not (a and b and c):
        raise ValueError("bounds need X1, X2 and X3 all non-empty")
    return c * (a + b - 1), a * (b + c - 1)


def is_forest(edges) -> bool:
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def cycles_by_path(cycles) -> dict[tuple[int, int, int], list[Cycle]]:
    """Index 6-cycles by each of their length-two subpaths ``u v w`` (keyed with ``u < w``).

    The cycle stored under a key is rotated to read ``u, v, w, x3, x2, x1``.
    """
    index: dict[tuple[int, int, int], list[Cycle]] = {}
    for cyc in cycles:
        k = len(cyc)
        for i in range(k):
            u, v, w = cyc[i - 1], cyc[i], cyc[(i + 1) % k]
            if u < w:
                seq = tuple(cyc[(i - 1 + j) % k] for j in range(k))
            else:
                seq = tuple(cyc[(i + 1 - j) % k] for j in range(k))
                u, w = w, u
            index.setdefault((u, v, w), []).append(seq)
    return index


def path_counts_from(g: Graph, u: int, max_len: int) -> list[list[int]]:
    """``counts[i][w]`` is the number of simple ``u``-``w`` paths with ``i`` edges."""
    if not 0 <= max_len <= MAX_PATH_LEN:
        raise ValueError(f"path length must be at most {MAX_PATH_LEN}")
    rows = g.rows
    counts = [[0] * g.n for _ in range(max_len + 1)]

    def rec(x: int, depth: int, visited: int) -> None:
        row = counts[depth]
        row[x] += 1
        if depth == max_len:
            return
        for y in bits(rows[x] & ~visited):
            rec(y, depth + 1, visited | 1 << y)

    rec(u, 0, 1 << u)
    return counts


def count_paths(g: Graph, u: int, w: int, i: int) -> int:
    """Number of simple paths from ``u`` to ``w`` with exactly ``i`` edges."""
    if u == w:
        raise ValueError("path endpoints must differ")
    if not 1 <= i <= MAX_PATH_LEN:
        raise ValueError(f"path length must be in 1..{MAX_PATH_LEN}")
    return path_counts_from(g, u, i)[i][w]


def path_bound(n: int, i: int) -> int:
    """Planar upper bound on the number of ``u``-``w`` paths with ``i`` edges."""
    if i % 2 == 0:
        return n * (6 * n - 12) ** (i // 2 - 1)
    return (6 * n - 12) ** ((i - 1) // 2)
