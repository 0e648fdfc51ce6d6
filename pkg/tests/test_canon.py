from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from src.canon import canonical_form, canonical_graph, canonical_order, is_isomorphic
from src.errors import GuardExceededError
from src.graph import Graph, complete_graph, path_graph, star_graph
from tests.strategies import p1_mfisg_graphs, graphs, permuted


@settings(max_examples=1000, deadline=None)
@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_canonical_form_is_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(permuted(g, perm)) == canonical_form(g)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7))
def test_canonical_graph_is_isomorphic_copy(g):
    h = canonical_graph(g)
    assert nx.is_isomorphic(g.to_networkx(), h.to_networkx())
    assert canonical_graph(h) == h


def test_triangle_relabelled():
    assert canonical_form(complete_graph(3)) == canonical_form(permuted(complete_graph(3), [2, 0, 1]))


def test_path_and_star_differ():
    assert canonical_form(path_graph(4)) != canonical_form(star_graph(3))
    assert not is_isomorphic(path_graph(4), star_graph(3))


def test_fixture_graphs_are_pairwise_distinct():
    labels = [canonical_form(g) for g in p1_mfisg_graphs().values()]
    assert len(labels) == 11
    assert len(set(labels)) == 11


def test_agrees_with_networkx_on_five_vertex_graphs():
    pairs = list(combinations(range(5), 2))
    sample = []
    for bits in range(0, 1 << len(pairs), 37):
        sample.append(Graph.from_edges(5, (p for i, p in enumerate(pairs) if bits >> i & 1)))
    for g, h in combinations(sample, 2):
        assert is_isomorphic(g, h) == nx.is_isomorphic(g.to_networkx(), h.to_networkx())


def test_guard():
    with pytest.raises(GuardExceededError):
        canonical_order(path_graph(13))
    assert len(canonical_order(path_graph(13), guard=None)) == 13
