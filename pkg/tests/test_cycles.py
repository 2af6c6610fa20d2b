import random

import pytest
from hypothesis import given, settings

from oracles import naive_count, naive_paths, naive_per_vertex, naive_through_path
from planarcycles.constructions import gen_F, gen_Fprime
from planarcycles.cycles import (
    count_induced_cycles,
    count_paths,
    cycles_by_path,
    induced_cycles_through_path,
    is_forest,
    lemma_bounds,
    path_bound,
    x_decomposition,
)
from planarcycles.graph import common_neighbourhood, complete_graph, cycle_graph, from_edge_list
from planarcycles.planarity import is_planar
from planarcycles.search import random_planar
from test_graph import graphs

# F(9,6): hubs 0,1,2; A = {3,4} between 0 and 1, B = {5,6} between 1 and 2, C = {7,8} between 2 and 0
F9 = gen_F(9, 6)[0]
K4 = complete_graph(4)
C6 = cycle_graph(6)


def test_count_examples():
    assert count_induced_cycles(C6, 6).total == 1
    assert count_induced_cycles(K4, 6).total == 0
    assert count_induced_cycles(gen_F(10, 6)[0], 6).total == 12
    assert count_induced_cycles(gen_F(12, 6)[0], 6).total == 27


def test_frozen_per_vertex():
    rep = count_induced_cycles(F9, 6)
    assert rep.per_vertex == (8, 8, 8, 4, 4, 4, 4, 4, 4)
    assert sum(rep.per_edge.values()) == 6 * rep.total


@pytest.mark.parametrize("k", [3, 13, 2])
def test_k_range(k):
    if k == 3:
        assert count_induced_cycles(K4, 3).total == 4
    else:
        with pytest.raises(ValueError):
            count_induced_cycles(K4, k)


@given(graphs(max_n=9))
@settings(max_examples=120, deadline=None)
def test_matches_naive(g):
    for k in (4, 5, 6):
        rep = count_induced_cycles(g, k)
        assert rep.total == naive_count(g, k)
        assert list(rep.per_vertex) == naive_per_vertex(g, k)
        assert sum(rep.per_vertex) == k * rep.total


def test_keep_cycles_lists_each_once():
    rep = count_induced_cycles(gen_Fprime(10, 6)[0], 6, keep_cycles=True)
    assert len(rep.cycles) == rep.total == 12
    assert len({frozenset(c) for c in rep.cycles}) == rep.total


def test_through_path_examples():
    assert induced_cycles_through_path(F9, 0, 3, 1, 6) == 4
    assert naive_through_path(F9, 0, 3, 1, 6) == 4
    assert induced_cycles_through_path(C6, 0, 1, 2, 6) == 1
    assert induced_cycles_through_path(K4, 0, 1, 2, 6) == 0
    assert induced_cycles_through_path(K4, 0, 1, 2, 3) == 1
    assert induced_cycles_through_path(gen_F(12, 6)[0], 0, 3, 1, 6) == 9
    with pytest.raises(ValueError):
        induced_cycles_through_path(C6, 0, 2, 4, 6)
    with pytest.raises(ValueError):
        induced_cycles_through_path(C6, 0, 1, 0, 6)


def test_through_path_enumeration():
    cycles = induced_cycles_through_path(F9, 0, 3, 1, 6, return_cycles=True)
    assert len(cycles) == 4
    for c in cycles:
        assert c[:3] == (0, 3, 1)
        assert c[3] in {5, 6} and c[4] == 2 and c[5] in {7, 8}


def test_x_decomposition_examples():
    d = x_decomposition(F9, 0, 3, 1)
    assert d.X == {5, 6, 7, 8, 2}
    assert d.X1 == {7, 8} and d.X2 == {2} and d.X3 == {5, 6}
    assert lemma_bounds(d) == (4, 4)
    d = x_decomposition(C6, 0, 1, 2)
    assert (len(d.X1), len(d.X2), len(d.X3)) == (1, 1, 1)
    assert lemma_bounds(d) == (1, 1)
    d = x_decomposition(K4, 0, 1, 2)
    assert d.X == set()
    with pytest.raises(ValueError):
        lemma_bounds(d)
    d = x_decomposition(gen_F(12, 6)[0], 0, 3, 1)
    assert lemma_bounds(d) == (9, 9) and d.n_cycles == 9


def _check_decomposition(g, u, v, w):
    d = x_decomposition(g, u, v, w)
    assert not (d.X1 & d.X2 or d.X2 & d.X3 or d.X1 & d.X3)
    assert d.X1 | d.X2 | d.X3 == d.X
    assert not d.X & {u, v, w}
    nu, nw = g.neighbours(u), g.neighbours(w)
    assert d.X1 <= nu and d.X3 <= nw and not d.X2 & (nu | nw)
    if d.n_cycles:
        assert {a for a, _ in d.G1} == d.X1
        assert {b for _, b in d.G1} == d.X2 == {b for b, _ in d.G2}
        assert {c for _, c in d.G2} == d.X3
        assert is_forest(d.G1) and is_forest(d.G2)
        assert d.n_cycles <= min(lemma_bounds(d))


@pytest.mark.parametrize("seed", range(40))
def test_decomposition_invariants_on_planar_graphs(seed):
    rng = random.Random(seed)
    n = rng.randint(6, 14)
    g = random_planar(n, seed, rng.randint(n, 3 * n - 6))
    for v in range(n):
        nb = sorted(g.neighbours(v))
        for i, u in enumerate(nb):
            for w in nb[i + 1 :]:
                _check_decomposition(g, u, v, w)


def test_is_forest():
    assert is_forest([(0, 1), (1, 2), (3, 4)])
    assert not is_forest([(0, 1), (1, 2), (2, 0)])
    assert is_forest([])


def test_cycles_by_path_rotation():
    rep = count_induced_cycles(F9, 6, keep_cycles=True)
    index = cycles_by_path(rep.cycles)
    assert len(index[(0, 3, 1)]) == 4
    for (u, v, w), cycles in index.items():
        assert u < w
        assert len(cycles) == induced_cycles_through_path(F9, u, v, w, 6)
        assert all(c[:3] == (u, v, w) for c in cycles)


def test_count_paths_examples():
    assert count_paths(C6, 0, 3, 3) == 2
    assert count_paths(F9, 0, 1, 2) == 2
    assert count_paths(F9, 0, 1, 2) == len(common_neighbourhood(F9, 0, 1))
    with pytest.raises(ValueError):
        count_paths(C6, 0, 0, 2)
    with pytest.raises(ValueError):
        count_paths(C6, 0, 1, 9)


@given(graphs(max_n=7))
@settings(max_examples=60, deadline=None)
def test_count_paths_matches_naive(g):
    if g.n < 2:
        return
    for i in range(1, min(g.n, 5)):
        assert count_paths(g, 0, g.n - 1, i) == naive_paths(g, 0, g.n - 1, i)


def test_path_bound_values():
    assert path_bound(10, 2) == 10
    assert path_bound(10, 3) == 48
    assert path_bound(10, 4) == 480
    assert path_bound(10, 5) == 48**2


@pytest.mark.parametrize("seed", range(10))
def test_path_bound_holds(seed):
    g = random_planar(12, seed)
    assert is_planar(g).planar
    for u in range(g.n):
        for w in range(g.n):
            if u != w:
                for i in range(2, 7):
                    assert count_paths(g, u, w, i) <= path_bound(g.n, i)


def test_star_with_chord_path():
    # two disjoint u-w routes plus a shortcut give a unique induced 4-cycle through 0-1-2
    g = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 0)])
    assert induced_cycles_through_path(g, 0, 1, 2, 4) == 2
