import pytest

from src.bal import BalSpec, bal_build
from src.enumeration import enumerate_interval_graphs
from src.errors import GuardExceededError, InvalidModelError, NotIntervalError
from src.graph import Graph, complete_graph, cycle_graph, disjoint_union, path_graph, star_graph, weight_of_graph
from src.impropriety import (
    KIND_WEIGHT, LEFT, RIGHT, IntervalModel, ascii_diagram, imp_of_clique_order, impropriety,
    impropriety_bruteforce, impropriety_of_model, is_p_improper, model_from_clique_order,
    nesting_counts, side_components,
)
from src.recognition import consecutive_orderings, is_interval
from tests.strategies import p1_mfisg_graphs


def model(*events):
    return IntervalModel(len(events) // 2, tuple((v, side) for v, side in events))


def test_nested_pair():
    m = model((0, LEFT), (1, LEFT), (1, RIGHT), (0, RIGHT))
    assert impropriety_of_model(m) == ((1, 0), 1)


def test_disjoint_pair():
    m = model((0, LEFT), (0, RIGHT), (1, LEFT), (1, RIGHT))
    assert impropriety_of_model(m) == ((0, 0), 0)


def test_star_model_with_everything_inside():
    m = model((0, LEFT), (1, LEFT), (1, RIGHT), (2, LEFT), (2, RIGHT), (3, LEFT), (3, RIGHT), (0, RIGHT))
    counts, worst = impropriety_of_model(m)
    assert counts[0] == 3 and worst == 3
    assert m.realizes(star_graph(3))


@pytest.mark.parametrize("events", [
    ((0, RIGHT), (0, LEFT)),
    ((0, LEFT), (0, LEFT)),
    ((0, LEFT), (1, RIGHT)),
    ((0, LEFT), (0, "X")),
])
def test_invalid_models(events):
    with pytest.raises(InvalidModelError):
        IntervalModel(1, events)


def test_model_dict_round_trip():
    m = model((0, LEFT), (1, LEFT), (0, RIGHT), (1, RIGHT))
    assert IntervalModel.from_dict(m.to_dict()) == m


def test_model_from_coordinates():
    m = IntervalModel.from_intervals([(0, 10), (2, 4), (4, 6), (8, 12)])
    assert m.intersection_graph() == Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    assert impropriety_of_model(m) == ((2, 0, 0, 0), 2)


def test_empty_coordinate_interval_is_rejected():
    with pytest.raises(InvalidModelError):
        IntervalModel.from_intervals([(0, 1), (3, 3)])


def test_clique_order_values():
    assert imp_of_clique_order(complete_graph(4), is_interval(complete_graph(4))) == 0
    assert {imp_of_clique_order(star_graph(3), o) for o in consecutive_orderings(star_graph(3))} == {1}
    assert {imp_of_clique_order(star_graph(4), o) for o in consecutive_orderings(star_graph(4))} == {2}


def test_nesting_counts_star():
    sigma = next(consecutive_orderings(star_graph(3)))
    assert sorted(nesting_counts(sigma)) == [0, 0, 0, 1]


def test_model_for_edge_has_no_containment():
    m = model_from_clique_order(complete_graph(2), is_interval(complete_graph(2)))
    assert m.realizes(complete_graph(2))
    assert impropriety_of_model(m)[1] == 0


@pytest.mark.parametrize("n", range(1, 7))
def test_models_match_their_orderings(n):
    for g in enumerate_interval_graphs(n):
        for sigma in consecutive_orderings(g):
            m = model_from_clique_order(g, sigma)
            assert m.realizes(g)
            assert impropriety_of_model(m)[1] == imp_of_clique_order(g, sigma)


@pytest.mark.parametrize("p", range(4))
def test_star_family(p):
    cert = impropriety(star_graph(p + 3))
    assert cert.p == p + 1
    assert cert.lower_bound_kind == KIND_WEIGHT


def test_certificate_is_consistent():
    for name, g in p1_mfisg_graphs().items():
        cert = impropriety(g)
        assert cert.p == 2, name
        assert cert.witness_model.realizes(g)
        assert impropriety_of_model(cert.witness_model) == (cert.per_vertex, cert.p)
        assert cert.lower_bound == cert.p


def test_balanced_one_bal_model():
    g, _ = bal_build(BalSpec.create(2, [complete_graph(2)]))
    assert impropriety(g).p == 2


def test_disconnected_graph_takes_component_maximum():
    g = disjoint_union([star_graph(3), path_graph(3), star_graph(4)])
    cert = impropriety(g)
    assert cert.p == 2
    assert cert.witness_model.realizes(g)
    assert impropriety_of_model(cert.witness_model)[1] == 2


def test_empty_graph():
    assert impropriety(path_graph(0)).p == 0
    assert impropriety_bruteforce(path_graph(0)) == 0


def test_decision_version():
    assert not is_p_improper(star_graph(4), 1)
    assert is_p_improper(star_graph(4), 2)
    assert is_p_improper(path_graph(7), 0)


def test_non_interval_input():
    with pytest.raises(NotIntervalError):
        impropriety(cycle_graph(5))
    with pytest.raises(NotIntervalError):
        impropriety_bruteforce(cycle_graph(4))


def test_bruteforce_guard():
    with pytest.raises(GuardExceededError):
        impropriety_bruteforce(path_graph(8))


@pytest.mark.parametrize("n", range(1, 6))
def test_agrees_with_endpoint_oracle(n):
    for g in enumerate_interval_graphs(n):
        assert impropriety(g).p == impropriety_bruteforce(g)


@pytest.mark.slow
def test_agrees_with_endpoint_oracle_at_six_vertices():
    for g in enumerate_interval_graphs(6):
        assert impropriety(g).p == impropriety_bruteforce(g)


@pytest.mark.parametrize("n", range(1, 7))
def test_weight_is_a_lower_bound(n):
    for g in enumerate_interval_graphs(n):
        assert impropriety(g).p >= weight_of_graph(g)


@pytest.mark.parametrize("n", range(2, 7))
def test_impropriety_is_hereditary(n):
    for g in enumerate_interval_graphs(n):
        p = impropriety(g).p
        assert all(impropriety(g.delete_vertex(v)).p <= p for v in range(g.n))


@pytest.mark.slow
def test_weight_bound_and_heredity_at_seven_vertices():
    for g in enumerate_interval_graphs(7):
        p = impropriety(g).p
        assert p >= weight_of_graph(g)
        assert all(impropriety(g.delete_vertex(v)).p <= p for v in range(g.n))


def test_side_components_of_star():
    g = star_graph(3)
    layout = side_components(impropriety(g).witness_model, g, 0)
    assert len(layout["side"]) == 2
    assert len(layout["inner"]) == 1


def test_ascii_diagram_has_one_row_per_vertex():
    text = ascii_diagram(impropriety(star_graph(3)).witness_model)
    assert len(text.splitlines()) == 4
    assert all("[" in line and "]" in line for line in text.splitlines())
