"""Detectors for the local structures that force a planar graph with many
induced 6-cycles towards the extremal family.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .cycles import (
    CycleCountReport,
    count_induced_cycles,
    cycles_by_path,
    decomposition_from_cycles,
    x_decomposition,
)
from .graph import Graph, VertexSet, bits
from .planarity import Embedding, dart_faces, validate_embedding

FAN_SIZE = 7


def _six_report(g: Graph, report: Optional[CycleCountReport], keep_cycles: bool = False) -> CycleCountReport:
    if report is None or report.k != 6 or (keep_cycles and report.cycles is None):
        return count_induced_cycles(g, 6, keep_cycles=keep_cycles)
    return report


def principal_neighbours(g: Graph, v: int, report: Optional[CycleCountReport] = None) -> VertexSet:
    """Neighbours of ``v`` sharing an induced 6-cycle with it.

    Two adjacent vertices on a common induced cycle are consecutive on it, so
    this reads off the per-edge tallies.
    """
    report = _six_report(g, report)
    return frozenset(u for u in bits(g.rows[v]) if report.per_edge[(u, v) if u < v else (v, u)])


def principal_map(g: Graph, report: Optional[CycleCountReport] = None) -> dict[int, VertexSet]:
    report = _six_report(g, report)
    out: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for (u, v), c in report.per_edge.items():
        if c:
            out[u].add(v)
            out[v].add(u)
    return {v: frozenset(s) for v, s in out.items()}


@dataclass(frozen=True)
class EmptyK27Witness:
    u: int
    w: int
    fan: tuple[int, ...]

    @property
    def central(self) -> int:
        return self.fan[FAN_SIZE // 2]

    def to_dict(self) -> dict:
        return {"u": self.u, "w": self.w, "fan": list(self.fan), "central": self.central}


def _region_interior(
    face_nbrs: list[list[tuple[int, frozenset]]],
    face_tails: list[int],
    start_face: int,
    boundary: list[int],
) -> int:
    """Bitmask of vertices strictly inside the closed walk ``boundary`` on the side of ``start_face``."""
    k = len(boundary)
    blocked = {frozenset((boundary[i], boundary[(i + 1) % k])) for i in range(k)}
    seen = {start_face}
    queue = deque([start_face])
    inside = 0
    while queue:
        f = queue.popleft()
        inside |= face_tails[f]
        for h, edge in face_nbrs[f]:
            if h not in seen and edge not in blocked:
                seen.add(h)
                queue.append(h)
    for v in boundary:
        inside &= ~(1 << v)
    return inside


def _face_structure(g: Graph, e: Embedding):
    face_of, nfaces = dart_faces(e, g)
    face_nbrs: list[list[tuple[int, frozenset]]] = [[] for _ in range(nfaces)]
    face_tails = [0] * nfaces
    for (a, b), f in face_of.items():
        face_tails[f] |= 1 << a
        if a < b:
            h = face_of[(b, a)]
            edge = frozenset((a, b))
            face_nbrs[f].append((h, edge))
            face_nbrs[h].append((f, edge))
    return face_of, face_nbrs, face_tails


def fan_order(g: Graph, e: Embedding, u: int, w: int) -> list[int]:
    """Common neighbours of ``u`` and ``w`` in clockwise order around ``u``."""
    common = g.rows[u] & g.rows[w]
    return [x for x in e.rotation[u] if common >> x & 1]


def find_empty_k27(g: Graph, e: Embedding, u: int, w: int) -> list[EmptyK27Witness]:
    """All windows of seven consecutive common neighbours of ``u`` and ``w``
    whose six separating 4-cycles ``u v_i w v_{i+1}`` enclose no vertex in ``e``.
    """
    if u == w:
        raise ValueError("u and w must differ")
    validate_embedding(e, g)
    fan = fan_order(g, e, u, w)
    t = len(fan)
    if t < FAN_SIZE:
        return []
    face_of, face_nbrs, face_tails = _face_structure(g, e)
    empty = []
    for i in range(t):
        a, b = fan[i], fan[(i + 1) % t]
        start = face_of[(u, e.successor(u, a))]
        interior = _region_interior(face_nbrs, face_tails, start, [u, a, w, b])
        empty.append(interior == 0)
    out = []
    for i in range(t):
        if all(empty[(i + j) % t] for j in range(FAN_SIZE - 1)):
            out.append(EmptyK27Witness(u, w, tuple(fan[(i + j) % t] for j in range(FAN_SIZE))))
    return out


def _check_witness(g: Graph, wit: EmptyK27Witness) -> None:
    if len(wit.fan) != FAN_SIZE or len(set(wit.fan)) != FAN_SIZE or wit.u == wit.w:
        raise ValueError("witness needs two distinct centres and seven distinct fan vertices")
    common = g.rows[wit.u] & g.rows[wit.w]
    if any(not common >> x & 1 for x in wit.fan):
        raise ValueError("fan vertex outside the common neighbourhood")


def central_principal_check(g: Graph, wit: EmptyK27Witness, report: Optional[CycleCountReport] = None) -> bool:
    """True iff the central fan vertex has exactly ``u`` and ``w`` as principal neighbours."""
    _check_witness(g, wit)
    return principal_neighbours(g, wit.central, report) == {wit.u, wit.w}


@dataclass(frozen=True)
class GoodSixCycle:
    """Induced cycle ``u1 v1 u2 v2 u3 v3`` whose spokes ``v_i`` have only ``u_i, u_{i+1}`` as principal neighbours."""

    hubs: tuple[int, int, int]
    spokes: tuple[int, int, int]

    @property
    def cycle(self) -> tuple[int, ...]:
        (u1, u2, u3), (v1, v2, v3) = self.hubs, self.spokes
        return (u1, v1, u2, v2, u3, v3)

    def to_dict(self) -> dict:
        return {"hubs": list(self.hubs), "spokes": list(self.spokes)}


def _canonical_good(seq: tuple[int, ...]) -> GoodSixCycle:
    # seq alternates hub, spoke, ...; start at the smallest hub, then go towards the smaller next hub
    i = min(range(0, 6, 2), key=lambda j: seq[j])
    fwd = [seq[(i + j) % 6] for j in range(6)]
    bwd = [seq[(i - j) % 6] for j in range(6)]
    s = fwd if fwd[2] < fwd[4] else bwd
    return GoodSixCycle((s[0], s[2], s[4]), (s[1], s[3], s[5]))


def find_good_6cycle(g: Graph, report: Optional[CycleCountReport] = None) -> list[GoodSixCycle]:
    """Every hub/spoke labelling of an induced 6-cycle meeting the good-cycle condition.

    A cycle whose both alternating triples qualify (``C6`` itself) appears
    once per labelling. Output is sorted.
    """
    report = _six_report(g, report, keep_cycles=True)
    pmap = principal_map(g, report)
    out = set()
    for cyc in report.cycles:
        for off in (0, 1):
            spokes = [cyc[(off + 2 * j + 1) % 6] for j in range(3)]
            if all(len(pmap[s]) == 2 for s in spokes):
                out.add(_canonical_good(tuple(cyc[(off + j) % 6] for j in range(6))))
    return sorted(out, key=lambda c: c.cycle)


def is_good_six_cycle(g: Graph, c: GoodSixCycle, report: Optional[CycleCountReport] = None) -> bool:
    seq = c.cycle
    if len(set(seq)) != 6:
        return False
    mask = 0
    for v in seq:
        mask |= 1 << v
    for i, v in enumerate(seq):
        if g.rows[v] & mask != (1 << seq[i - 1]) | (1 << seq[(i + 1) % 6]):
            return False
    pmap = principal_map(g, _six_report(g, report))
    return all(len(pmap[s]) == 2 for s in c.spokes)


def xyz_intersection(
    g: Graph,
    c: GoodSixCycle,
    report: Optional[CycleCountReport] = None,
    path_index: Optional[dict] = None,
    validate: bool = True,
) -> VertexSet:
    """Vertices lying on induced 6-cycles through each of the three hub-spoke-hub paths."""
    if validate and not is_good_six_cycle(g, c, report):
        raise ValueError(f"{c} is not a good 6-cycle of the graph")
    (u1, u2, u3), (v1, v2, v3) = c.hubs, c.spokes
    sets = []
    for a, v, b in ((u1, v1, u2), (u2, v2, u3), (u3, v3, u1)):
        if path_index is None:
            sets.append(x_decomposition(g, a, v, b).X)
        else:
            lo, hi = min(a, b), max(a, b)
            sets.append(decomposition_from_cycles(g, lo, v, hi, path_index.get((lo, v, hi), [])).X)
    return sets[0] & sets[1] & sets[2]


def vertex_minimum_probe(g: Graph, report: Optional[CycleCountReport] = None) -> tuple[int, int]:
    """Vertex on the fewest induced 6-cycles (smallest index on ties) and its count."""
    if g.n == 0:
        raise ValueError("empty graph has no vertices")
    report = _six_report(g, report)
    counts = report.per_vertex
    v = min(range(g.n), key=lambda x: (counts[x], x))
    return v, counts[v]


@dataclass(frozen=True)
class HubCycleWitness:
    k: int
    hubs: tuple[int, ...]
    min_common: int

    def to_dict(self) -> dict:
        return {"k": self.k, "hubs": list(self.hubs), "min_common": self.min_common}


def common_size(g: Graph, x: int, y: int) -> int:
    return (g.rows[x] & g.rows[y]).bit_count()


def hub_cycle_probe(g: Graph, k: int, tau: int, limit: Optional[int] = None) -> list[HubCycleWitness]:
    """Cyclic sequences of ``k`` distinct vertices whose consecutive pairs share at least ``tau`` neighbours.

    Each sequence is reported once up to rotation and reversal, starting at
    its smallest vertex with the second entry smaller than the last.
    """
    if k < 3:
        raise ValueError("need k >= 3")
    if tau < 1:
        raise ValueError("need tau >= 1")
    rows = g.rows
    cands = [v for v in range(g.n) if rows[v].bit_count() >= tau]
    strong = [0] * g.n
    for i, x in enumerate(cands):
        for y in cands[i + 1 :]:
            if (rows[x] & rows[y]).bit_count() >= tau:
                strong[x] |= 1 << y
                strong[y] |= 1 << x
    out: list[HubCycleWitness] = []

    def rec(path: list[int], visited: int, higher: int) -> bool:
        last = path[-1]
        if len(path) == k:
            if strong[last] >> path[0] & 1 and last > path[1]:
                seq = tuple(path)
                mc = min(common_size(g, seq[i], seq[(i + 1) % k]) for i in range(k))
                out.append(HubCycleWitness(k, seq, mc))
                return limit is not None and len(out) >= limit
            return False
        for y in bits(strong[last] & higher & ~visited):
            path.append(y)
            if rec(path, visited | 1 << y, higher):
                return True
            path.pop()
        return False

    full = (1 << g.n) - 1
    for s in cands:
        higher = full & ~((1 << (s + 1)) - 1)
        if rec([s], 1 << s, higher):
            break
    return out


def analyze(g: Graph, e: Optional[Embedding] = None, k_half: int = 3, tau: int = 2, probe_threshold: Optional[float] = None) -> dict:
    """Run every detector on ``g`` and collect JSON-ready results.

    The hub-cycle probe only runs when every vertex lies on at least
    ``probe_threshold`` induced 6-cycles (default ``n**2 / 10``).
    """
    from .planarity import is_planar

    report = count_induced_cycles(g, 6, keep_cycles=True)
    if e is None:
        res = is_planar(g)
        e = res.embedding
    pmap = principal_map(g, report)
    good = find_good_6cycle(g, report)
    index = cycles_by_path(report.cycles)
    witnesses = []
    if e is not None:
        for u in range(g.n):
            for w in range(u + 1, g.n):
                if (g.rows[u] & g.rows[w]).bit_count() >= FAN_SIZE:
                    for wit in find_empty_k27(g, e, u, w):
                        witnesses.append({**wit.to_dict(), "central_principal_ok": central_principal_check(g, wit, report)})
    threshold = g.n**2 / 10 if probe_threshold is None else probe_threshold
    vmin = vertex_minimum_probe(g, report) if g.n else None
    passed = vmin is not None and vmin[1] >= threshold
    hub = [h.to_dict() for h in hub_cycle_probe(g, k_half, tau)] if passed else None
    return {
        "n": g.n,
        "m": g.m,
        "planar": e is not None,
        "induced_6_cycles": report.total,
        "principal_neighbours": {str(v): sorted(s) for v, s in pmap.items()},
        "good_6_cycles": [
            {**c.to_dict(), "xyz_intersection": sorted(xyz_intersection(g, c, report, index, validate=False))} for c in good
        ],
        "empty_k27": witnesses,
        "vertex_minimum": {"vertex": vmin[0], "count": vmin[1]} if vmin else None,
        "hub_cycle_probe": {"k": k_half, "tau": tau, "threshold": threshold, "ran": passed, "witnesses": hub},
    }
