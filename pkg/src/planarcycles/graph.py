"""Immutable simple undirected graphs backed by per-vertex neighbour bitmasks.

Vertices are the integers ``0..n-1``. Row ``i`` of the adjacency is stored as a
Python ``int`` whose bit ``j`` is set iff ``ij`` is an edge, so neighbourhood
intersections and unions are single integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

VertexSet = frozenset


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Use :func:`from_edge_list` (or :meth:`from_rows`) rather than building the
    rows by hand; the constructor trusts its input.
    """

    n: int
    rows: tuple[int, ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", sum(r.bit_count() for r in self.rows) // 2)

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> Graph:
        rows = tuple(rows)
        n = len(rows)
        full = (1 << n) - 1
        for i, r in enumerate(rows):
            if r & ~full:
                raise ValueError(f"row {i} references a vertex outside 0..{n - 1}")
            if r >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in bits(r):
                if not rows[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")
        return cls(n, rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbours(self, v: int) -> VertexSet:
        return frozenset(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def adjacency_matrix(self) -> list[list[bool]]:
        return [[bool(r >> j & 1) for j in range(self.n)] for r in self.rows]

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges are collapsed.

    Raises ``ValueError`` for loops or out-of-range endpoints.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def common_neighbourhood(g: Graph, u: int, w: int) -> VertexSet:
    """Return ``N(u) & N(w)``."""
    if u == w:
        raise ValueError("common neighbourhood needs two distinct vertices")
    return frozenset(bits(g.rows[u] & g.rows[w]))


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """Return ``G - S`` with the surviving vertices relabelled in their original order."""
    removed = mask_of(s)
    if removed >> g.n:
        raise ValueError("deleted set references vertices outside the graph")
    keep = [v for v in range(g.n) if not removed >> v & 1]
    return induced_subgraph(g, keep)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``; vertex ``vertices[i]`` becomes ``i``."""
    keep = list(vertices)
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        r = 0
        for w in bits(g.rows[v]):
            j = index.get(w)
            if j is not None:
                r |= 1 << j
        rows.append(r)
    return Graph(len(keep), tuple(rows))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
    rows = [0] * g.n
    for v in range(g.n):
        rows[perm[v]] = mask_of(perm[w] for w in bits(g.rows[v]))
    return Graph(g.n, tuple(rows))
