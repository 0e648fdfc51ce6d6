import pytest

from src.errors import InvalidVertexError
from src.graph import (
    Graph, complete_graph, cycle_graph, disjoint_union, induced_subgraph, local_components, path_graph,
    positive_weight_vertices, spider_graph, star_graph, synthetic_profile_graph, vertex_type, weight_of_graph,
    weight_of_vertex, weight_rule,
)

A, B, C, D, F = 5, 5, 5, 4, 2


# (non-exterior orders, number of exterior components, weight at the centre)
WEIGHT_ROWS = [
    ([A, B], 2, 10),
    ([C, F], 2, 7),
    ([A, B], 1, 5),
    ([C, F], 1, 2),
    ([A, B, C, D, F], 0, 11),
    ([C, D, F], 0, 2),
    ([A, B, C, D, F], 2, 21),
    ([], 2, 0),
    ([A, B, C], 1, 10),
    ([C, F], 0, 0),
    ([D], 0, 0),
]


@pytest.mark.parametrize("orders,n_exterior,expected", WEIGHT_ROWS)
def test_weight_tables(orders, n_exterior, expected):
    g, z = synthetic_profile_graph(orders, n_exterior)
    profile = local_components(g, z)
    assert profile.n_exterior == n_exterior
    assert profile.non_exterior_orders() == sorted(orders)
    assert weight_of_vertex(g, z) == expected


def test_weight_rule_empty_sum():
    assert weight_rule(2, [7, 7]) == 0
    assert weight_rule(1, [3]) == 0
    assert weight_rule(4, [2, 1]) == 3


def test_star_center_profile():
    profile = local_components(star_graph(3), 0)
    assert profile.n_components == 3
    assert all(c.order == 1 and not c.exterior and c.clique for c in profile.components)
    assert profile.weight == 1


def test_path_center_profile():
    profile = local_components(path_graph(5), 2)
    assert sorted(sorted(c.vertices) for c in profile.components) == [[0, 1], [3, 4]]
    assert profile.n_exterior == 2
    assert profile.weight == 0


def test_local_components_rejects_bad_vertex():
    with pytest.raises(InvalidVertexError):
        local_components(path_graph(3), 3)
    with pytest.raises(InvalidVertexError):
        local_components(path_graph(3), -1)


def test_weight_of_graph():
    assert weight_of_graph(star_graph(4)) == 2
    assert weight_of_graph(path_graph(6)) == 0
    assert weight_of_graph(Graph(0, ())) == 0
    g, _ = synthetic_profile_graph([A, B, C, D, F], 2)
    assert weight_of_graph(g) == 21


def test_vertex_type():
    assert vertex_type(path_graph(5), 2) == 2
    assert vertex_type(star_graph(3), 0) == 0
    assert vertex_type(spider_graph([2, 2, 2]), 0) == 3


def test_positive_weight_vertices():
    assert positive_weight_vertices(star_graph(4)) == frozenset({0})
    assert positive_weight_vertices(path_graph(5)) == frozenset()


def test_induced_subgraph_relabels_densely():
    h, relabel = induced_subgraph(star_graph(4), [0, 2, 3, 4])
    assert h.n == 4 and h.n_edges() == 3 and h.degree(0) == 3
    assert relabel == {0: 0, 2: 1, 3: 2, 4: 3}
    p3, _ = induced_subgraph(cycle_graph(4), [0, 1, 2])
    assert p3 == path_graph(3)
    g = complete_graph(4)
    assert induced_subgraph(g, range(4))[0] == g


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph(1, (0b1,))
    with pytest.raises(InvalidVertexError):
        Graph.from_edges(2, [(0, 2)])


def test_components_and_deletion():
    g = disjoint_union([path_graph(2), complete_graph(3)])
    assert g.components() == [0b00011, 0b11100]
    assert not g.is_connected()
    assert star_graph(3).delete_vertex(0).n_edges() == 0
    assert len(star_graph(3).delete_vertex(0).components()) == 3


def test_networkx_round_trip():
    g = spider_graph([1, 2, 3])
    assert Graph.from_networkx(g.to_networkx()) == g
