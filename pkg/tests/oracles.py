"""Slow, obviously-correct reference computations used to freeze expected values.

Nothing here touches the bitmask kernels; graphs are read through
``has_edge`` only.
"""

from itertools import combinations, permutations

import networkx as nx


def is_induced_cycle(g, vertices):
    vs = list(vertices)
    k = len(vs)
    if k < 3:
        return False
    degs = {v: sum(g.has_edge(v, w) for w in vs if w != v) for v in vs}
    if any(d != 2 for d in degs.values()):
        return False
    # 2-regular and connected means a single cycle
    seen = {vs[0]}
    stack = [vs[0]]
    while stack:
        x = stack.pop()
        for y in vs:
            if y not in seen and g.has_edge(x, y):
                seen.add(y)
                stack.append(y)
    return len(seen) == k


def induced_cycle_sets(g, k):
    return [frozenset(c) for c in combinations(range(g.n), k) if is_induced_cycle(g, c)]


def naive_count(g, k):
    return len(induced_cycle_sets(g, k))


def naive_per_vertex(g, k):
    counts = [0] * g.n
    for c in induced_cycle_sets(g, k):
        for v in c:
            counts[v] += 1
    return counts


def naive_through_path(g, u, v, w, k):
    """Induced k-cycles whose vertex set contains u, v, w with v adjacent to both u and w in the cycle."""
    total = 0
    for c in induced_cycle_sets(g, k):
        if {u, v, w} <= c and g.has_edge(u, v) and g.has_edge(v, w):
            total += 1
    return total


def naive_principal(g, v):
    cycles = induced_cycle_sets(g, 6)
    return {u for u in range(g.n) if g.has_edge(u, v) and any(u in c and v in c for c in cycles)}


def naive_paths(g, u, w, i):
    others = [x for x in range(g.n) if x not in (u, w)]
    total = 0
    for mid in permutations(others, i - 1):
        seq = (u, *mid, w)
        if all(g.has_edge(seq[j], seq[j + 1]) for j in range(i)):
            total += 1
    return total


def reference_graph6(g):
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode().strip()


def hand_graph6(n, edges):
    """graph6 worked out directly from the format rules, bit string first."""
    edge_set = {frozenset(e) for e in edges}
    bitstr = "".join("1" if frozenset((i, j)) in edge_set else "0" for j in range(1, n) for i in range(j))
    bitstr += "0" * (-len(bitstr) % 6)
    body = "".join(chr(63 + int(bitstr[p : p + 6], 2)) for p in range(0, len(bitstr), 6))
    return chr(63 + n) + body


def brute_canonical(g):
    best = None
    for perm in permutations(range(g.n)):
        code = "".join("1" if g.has_edge(perm[i], perm[j]) else "0" for j in range(1, g.n) for i in range(j))
        if best is None or code < best:
            best = code
    return best
