import networkx as nx
import pytest
from hypothesis import given, settings

from src.codec import (
    adjacency_decode, adjacency_encode, graph6_decode, graph6_encode, graph6_stream_decode, graph6_stream_encode,
    load_graph, named_graph, parse_graph,
)
from src.errors import GraphParseError
from src.graph import Graph, complete_graph, cycle_graph, path_graph, spider_graph, star_graph
from tests.strategies import graphs


def test_decode_small_star():
    g = graph6_decode("D?{")
    assert g.n == 5
    assert g.edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert graph6_encode(g) == "D?{"


def test_empty_graph():
    assert graph6_encode(Graph(0, ())) == "?"
    assert graph6_decode("?") == Graph(0, ())


def test_header_is_accepted():
    assert parse_graph(">>graph6<<D?{") == graph6_decode("D?{")


@pytest.mark.parametrize("g", [path_graph(4), cycle_graph(7), complete_graph(6), spider_graph([2, 2, 2]),
                               Graph.from_edges(13, [(0, 12), (3, 7)])])
def test_encoding_matches_networkx(g):
    expected = nx.to_graph6_bytes(g.to_networkx(), header=False).decode().strip()
    assert graph6_encode(g) == expected


@settings(max_examples=200)
@given(graphs(max_n=10))
def test_graph6_identity(g):
    assert graph6_decode(graph6_encode(g)) == g


@pytest.mark.parametrize("text,offset", [
    ("D?", 2),
    ("D?{?", 3),
    ("D?\x01", 2),
])
def test_malformed_graph6(text, offset):
    with pytest.raises(GraphParseError) as info:
        graph6_decode(text)
    assert info.value.offset == offset


def test_nonzero_padding_is_rejected():
    assert graph6_decode("A_") == path_graph(2)
    with pytest.raises(GraphParseError):
        graph6_decode("A`")


def test_stream():
    stream = graph6_stream_encode([path_graph(3), star_graph(4)])
    assert stream.count("\n") == 2
    assert graph6_stream_decode(stream) == [path_graph(3), star_graph(4)]


def test_adjacency_list():
    assert adjacency_decode("0-1,1-2") == path_graph(3)
    assert adjacency_decode("0-1\n1-2\n") == path_graph(3)
    g = Graph.from_edges(3, [(0, 1)])
    assert adjacency_encode(g) == "0-1,2"
    assert adjacency_decode("0-1,2") == g


@pytest.mark.parametrize("text", ["0-1,x", "1-1", "0-1-2"])
def test_bad_adjacency_tokens(text):
    with pytest.raises(GraphParseError):
        adjacency_decode(text)


def test_named_graphs():
    assert named_graph("K4") == complete_graph(4)
    assert named_graph("K1,3") == star_graph(3)
    assert named_graph("K_{1,3}") == star_graph(3)
    assert named_graph("P5") == path_graph(5)
    assert named_graph("C6") == cycle_graph(6)
    assert named_graph("S2,2,2") == spider_graph([2, 2, 2])
    with pytest.raises(GraphParseError):
        named_graph("C2")


def test_parse_graph_autodetects():
    assert parse_graph("K1,3") == star_graph(3)
    assert parse_graph("0-1,1-2") == path_graph(3)
    assert parse_graph("D?{") == Graph.from_edges(5, [(0, 4), (1, 4), (2, 4), (3, 4)])


def test_load_graph_reads_files(tmp_path):
    path = tmp_path / "c5.g6"
    path.write_text(graph6_encode(cycle_graph(5)) + "\n", encoding="utf-8")
    assert load_graph(str(path)) == cycle_graph(5)
    assert load_graph("P3") == path_graph(3)
