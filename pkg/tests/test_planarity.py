import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planarcycles.constructions import gen_F, gen_Fprime
from planarcycles.graph import complete_bipartite_graph, complete_graph, cycle_graph, delete_vertices, from_edge_list
from planarcycles.planarity import Embedding, EmbeddingError, euler_characteristics, faces, is_planar
from planarcycles.search import random_planar
from test_graph import graphs


def test_kuratowski_graphs():
    assert not is_planar(complete_graph(5)).planar
    assert not is_planar(complete_bipartite_graph(3, 3)).planar
    assert is_planar(complete_graph(4)).planar


@pytest.mark.parametrize("n", range(6, 31))
def test_family_is_planar(n):
    assert is_planar(gen_F(n, 6)[0]).planar
    assert is_planar(gen_Fprime(n, 6)[0]).planar


def test_faces_examples():
    c6 = cycle_graph(6)
    walks = faces(is_planar(c6).embedding, c6)
    assert sorted(len(w) for w in walks) == [6, 6]
    k4 = complete_graph(4)
    assert sorted(len(w) for w in faces(is_planar(k4).embedding, k4)) == [3, 3, 3, 3]
    g, emb = gen_F(9, 6)
    assert len(faces(emb, g)) == 2 - 9 + 12


def test_inconsistent_rotation_rejected():
    g = cycle_graph(4)
    bad = Embedding(((1, 3), (0, 2), (1, 3), (0,)))
    with pytest.raises(EmbeddingError):
        faces(bad, g)


@given(graphs(max_n=9))
@settings(max_examples=150, deadline=None)
def test_embedding_and_heredity(g):
    res = is_planar(g)
    assert res.planar == __import__("networkx").check_planarity(g.to_networkx())[0]
    if not res.planar:
        return
    walks = faces(res.embedding, g)
    assert sum(len(w) for w in walks) == 2 * g.m
    assert all(chi == 2 for chi in euler_characteristics(res.embedding, g))
    if g.n >= 3:
        assert g.m <= 3 * g.n - 6
    for v in range(g.n):
        assert is_planar(delete_vertices(g, {v})).planar


@given(st.integers(3, 40), st.integers(0, 10_000))
@settings(max_examples=60, deadline=None)
def test_canonical_embeddings_satisfy_euler(n, seed):
    m = 6 if n >= 6 else 3
    for g, emb in (gen_F(n, m), gen_Fprime(n, m)):
        assert euler_characteristics(emb, g) == [2]
    g = random_planar(n, seed)
    emb = is_planar(g).embedding
    assert all(len(w) == 3 for w in faces(emb, g))


@pytest.mark.parametrize("m", [3, 4, 5, 7, 8, 10])
def test_odd_and_even_constructions_have_plane_rotations(m):
    g, emb = gen_F(3 * m, m)
    assert euler_characteristics(emb, g) == [2]
