"""Planarity testing, rotation systems and facial walks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import networkx as nx

from .graph import Graph, bits

Dart = tuple[int, int]


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class Embedding:
    """Rotation system: ``rotation[v]`` lists the neighbours of ``v`` in clockwise order."""

    rotation: tuple[tuple[int, ...], ...]

    @classmethod
    def from_lists(cls, rotation) -> Embedding:
        return cls(tuple(tuple(r) for r in rotation))

    def successor(self, v: int, u: int) -> int:
        """Neighbour of ``v`` that follows ``u`` clockwise."""
        rot = self.rotation[v]
        return rot[(rot.index(u) + 1) % len(rot)]

    def next_dart(self, dart: Dart) -> Dart:
        u, v = dart
        return v, self.successor(v, u)


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    embedding: Optional[Embedding] = None

    def __bool__(self) -> bool:
        return self.planar


def validate_embedding(e: Embedding, g: Graph) -> None:
    """Raise :class:`EmbeddingError` unless each rotation is a permutation of ``N(v)``."""
    if len(e.rotation) != g.n:
        raise EmbeddingError(f"rotation has {len(e.rotation)} entries for {g.n} vertices")
    for v, rot in enumerate(e.rotation):
        if len(set(rot)) != len(rot) or set(rot) != set(bits(g.rows[v])):
            raise EmbeddingError(f"rotation at vertex {v} does not list its neighbours exactly once")


def is_planar(g: Graph) -> PlanarityResult:
    """Test planarity; planar graphs come back with a rotation system."""
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return PlanarityResult(False)
    ok, emb = nx.check_planarity(g.to_networkx())
    if not ok:
        return PlanarityResult(False)
    data = emb.get_data()
    rotation = tuple(tuple(data.get(v, ())) for v in range(g.n))
    return PlanarityResult(True, Embedding(rotation))


def faces(e: Embedding, g: Graph) -> list[list[int]]:
    """Facial walks of the embedding, each given by the tails of its darts.

    Every dart lies on exactly one walk. Isolated vertices contribute no walk.
    """
    validate_embedding(e, g)
    seen: set[Dart] = set()
    walks = []
    for u in range(g.n):
        for v in e.rotation[u]:
            if (u, v) in seen:
                continue
            walk = []
            dart = (u, v)
            while dart not in seen:
                seen.add(dart)
                walk.append(dart[0])
                dart = e.next_dart(dart)
            if dart != (u, v):
                raise EmbeddingError("face traversal did not close up")
            walks.append(walk)
    return walks


def dart_faces(e: Embedding, g: Graph) -> tuple[dict[Dart, int], int]:
    """Map each dart to the index of its face; returns the map and the face count."""
    validate_embedding(e, g)
    face_of: dict[Dart, int] = {}
    count = 0
    for u in range(g.n):
        for v in e.rotation[u]:
            if (u, v) in face_of:
                continue
            dart = (u, v)
            while dart not in face_of:
                face_of[dart] = count
                dart = e.next_dart(dart)
            count += 1
    return face_of, count


def components(g: Graph) -> list[list[int]]:
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(bits(comp)))
    return out


def euler_characteristics(e: Embedding, g: Graph) -> list[int]:
    """``V - E + F`` for every connected component with at least one edge."""
    face_of, _ = dart_faces(e, g)
    out = []
    for comp in components(g):
        if len(comp) == 1:
            continue
        darts = [(u, v) for u in comp for v in e.rotation[u]]
        nfaces = len({face_of[d] for d in darts})
        out.append(len(comp) - len(darts) // 2 + nfaces)
    return out
