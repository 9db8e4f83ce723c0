import random

import networkx as nx
import pytest
from hypothesis import given, settings

from sepscope.errors import Graph6ParseError
from sepscope.formats import detect_format, encode_graph6, format_edgelist, parse_edgelist, parse_graph6, parse_graphs, to_dot
from sepscope.graph import Graph, named

from conftest import graphs, random_graph


def reference_graph6(g: Graph) -> str:
    ng = nx.Graph()
    ng.add_nodes_from(range(g.n))
    ng.add_edges_from(g.edges)
    return nx.to_graph6_bytes(ng, header=False).decode().strip()


def test_frozen_small_encodings():
    # cross-checked against networkx, then frozen
    assert reference_graph6(named("K1")) == "@"
    assert reference_graph6(named("K2")) == "A_"
    assert encode_graph6(named("K1")) == "@"
    assert encode_graph6(named("K2")) == "A_"


def test_matches_reference_codec():
    rng = random.Random(3)
    for _ in range(500):
        g = random_graph(rng, rng.randint(0, 30), rng.choice((0.1, 0.3, 0.6)))
        assert encode_graph6(g) == reference_graph6(g)


def test_round_trip_ten_thousand():
    rng = random.Random(20)
    for _ in range(10_000):
        g = random_graph(rng, rng.randint(0, 20), rng.random())
        s = encode_graph6(g)
        assert parse_graph6(s) == g
        assert encode_graph6(parse_graph6(s)) == s


@given(graphs(max_n=62))
@settings(max_examples=100, deadline=None)
def test_round_trip_property(g):
    assert parse_graph6(encode_graph6(g)) == g


@pytest.mark.parametrize(
    "text,offset",
    [("", 0), ("D~", 2), ("A ", 1), ("A_?", 2), ("A`", 1), ("~?@?", 0), ("D~{x", 3)],
)
def test_parse_errors_carry_offsets(text, offset):
    with pytest.raises(Graph6ParseError) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_header_and_edgelist():
    assert parse_graph6(">>graph6<<A_") == named("K2")
    g = named("house")
    assert parse_edgelist(format_edgelist(g)) == g
    assert parse_edgelist("# comment\n3 1\n0 2\n") == Graph(3, [(0, 2)])
    assert detect_format("3 1\n0 2\n") == "edgelist"
    assert detect_format("D{S\n") == "graph6"
    assert parse_graphs("A_\n@\n") == [named("K2"), named("K1")]


def test_dot_mentions_every_edge():
    dot = to_dot(named("house"), highlight=[0])
    assert dot.startswith("graph G {") and dot.count(" -- ") == 6 and "fillcolor" in dot
