import networkx as nx
import pytest

from src.enumeration import enumerate_connected_graphs
from src.errors import NotChordalError, NotIntervalError
from src.graph import Graph, complete_graph, cycle_graph, path_graph, spider_graph, star_graph
from src.recognition import (
    ASTEROIDAL_TRIPLE, CHORDLESS_CYCLE, CliqueOrdering, NonIntervalWitness, consecutive_orderings,
    find_chordless_cycle, is_chordal, is_interval, maximal_cliques, require_interval, verify_ordering,
    verify_witness,
)
from tests.strategies import p1_mfisg_graphs


def test_maximal_cliques():
    assert maximal_cliques(complete_graph(4)) == [frozenset(range(4))]
    assert maximal_cliques(path_graph(4)) == [frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3})]


def test_maximal_cliques_of_forests_and_the_empty_graph():
    assert maximal_cliques(Graph(0, ())) == []
    assert maximal_cliques(Graph.from_edges(3, [(0, 1)])) == [frozenset({0, 1}), frozenset({2})]


def test_maximal_cliques_match_networkx_on_chordal_graphs():
    for n in range(1, 6):
        for g in enumerate_connected_graphs(n):
            G = g.to_networkx()
            if nx.is_chordal(G):
                assert set(maximal_cliques(g)) == {frozenset(c) for c in nx.find_cliques(G)}


def test_maximal_cliques_rejects_cycles():
    with pytest.raises(NotChordalError) as info:
        maximal_cliques(cycle_graph(4))
    assert sorted(info.value.cycle) == [0, 1, 2, 3]


def test_star_is_interval():
    result = is_interval(star_graph(3))
    assert isinstance(result, CliqueOrdering)
    assert len(result.cliques) == 3
    assert verify_ordering(star_graph(3), result)


def test_cycle_witness():
    result = is_interval(cycle_graph(5))
    assert isinstance(result, NonIntervalWitness)
    assert result.kind == CHORDLESS_CYCLE
    assert len(result.vertices) == 5
    assert verify_witness(cycle_graph(5), result)


def test_spider_asteroidal_triple():
    g = spider_graph([2, 2, 2])
    assert is_chordal(g)
    result = is_interval(g)
    assert result.kind == ASTEROIDAL_TRIPLE
    assert sorted(result.vertices) == [2, 4, 6]
    assert verify_witness(g, result)


def test_require_interval_raises_with_witness():
    with pytest.raises(NotIntervalError) as info:
        require_interval(spider_graph([2, 2, 2]))
    assert info.value.witness.kind == ASTEROIDAL_TRIPLE


@pytest.mark.parametrize("g,count", [
    (complete_graph(5), 1),
    (path_graph(4), 2),
    (star_graph(3), 6),
])
def test_ordering_counts(g, count):
    orderings = list(consecutive_orderings(g))
    assert len(orderings) == count
    assert len({o.cliques for o in orderings}) == count
    assert all(verify_ordering(g, o) for o in orderings)


def test_orderings_of_non_interval_graph_raise():
    with pytest.raises(NotIntervalError):
        list(consecutive_orderings(cycle_graph(6)))


def test_verify_ordering_rejects_broken_certificates():
    g = path_graph(4)
    good = is_interval(g)
    shuffled = CliqueOrdering.from_cliques(4, [good.cliques[1], good.cliques[0], good.cliques[2]])
    assert not verify_ordering(g, shuffled)
    assert not verify_witness(g, NonIntervalWitness(CHORDLESS_CYCLE, (0, 1, 2, 3)))


def test_fixture_graphs_are_interval():
    for name, g in p1_mfisg_graphs().items():
        result = is_interval(g)
        assert isinstance(result, CliqueOrdering), name
        assert verify_ordering(g, result), name


def test_chordless_cycle_search():
    assert find_chordless_cycle(complete_graph(5)) is None
    assert sorted(find_chordless_cycle(cycle_graph(6))) == list(range(6))


@pytest.mark.parametrize("n", range(1, 7))
def test_recognition_agrees_with_chordal_at_free_test(n):
    # Interval graphs are exactly the chordal graphs without asteroidal triples
    for g in enumerate_connected_graphs(n):
        G = g.to_networkx()
        expected = nx.is_chordal(G) and nx.is_at_free(G)
        result = is_interval(g)
        assert isinstance(result, CliqueOrdering) == expected
        if expected:
            assert verify_ordering(g, result)
        else:
            assert verify_witness(g, result)


@pytest.mark.slow
def test_recognition_agrees_at_seven_vertices():
    for g in enumerate_connected_graphs(7):
        G = g.to_networkx()
        result = is_interval(g)
        assert isinstance(result, CliqueOrdering) == (nx.is_chordal(G) and nx.is_at_free(G))
