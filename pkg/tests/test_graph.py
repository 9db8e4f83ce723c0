import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sepscope.errors import CapabilityError, GraphInputError
from sepscope.generators import gamma, k_skinny_ladder
from sepscope.graph import (
    Graph,
    complement,
    components,
    contract_edge,
    cycle,
    from_edge_list,
    induced_subgraph,
    is_isomorphic,
    named,
    neighborhood,
    path,
    relabel,
)

from conftest import graphs


def iso(g, h):
    return is_isomorphic(g, h) is not None


def test_from_edge_list_examples():
    assert iso(from_edge_list(3, [(0, 1), (1, 2), (0, 2)]), named("K3"))
    assert iso(from_edge_list(4, [(0, 1), (2, 3)]), named("2P2"))
    with pytest.raises(GraphInputError):
        from_edge_list(2, [(0, 0)])
    with pytest.raises(GraphInputError):
        from_edge_list(2, [(0, 2)])


def test_duplicates_collapse():
    g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1 and g.edges == ((0, 1),)


def test_induced_subgraph_examples():
    c5 = named("C5")
    for s in itertools.combinations(range(5), 4):
        assert iso(induced_subgraph(c5, s)[0], named("P4"))
    house = named("house")
    # the apex e sits on the triangle a, d, e; dropping it leaves the square a b c d
    sub, index = induced_subgraph(house, [0, 1, 2, 3])
    assert iso(sub, named("C4")) and index == [0, 1, 2, 3]
    shapes = sorted(induced_subgraph(house, set(range(5)) - {v})[0].m for v in range(5))
    assert shapes == [3, 3, 4, 4, 4]
    assert induced_subgraph(house, range(5))[0] == house
    with pytest.raises(GraphInputError):
        induced_subgraph(house, [5])


@pytest.mark.parametrize("name,result", [("K3", "K2"), ("C4", "C3"), ("P3", "P2")])
def test_contract_examples(name, result):
    g = named(name)
    for e in g.edges:
        assert iso(contract_edge(g, e), named(result))


def test_contract_rejects_non_edge_and_compacts():
    with pytest.raises(GraphInputError):
        contract_edge(path(3), (0, 2))
    # 0-1-2-3: contracting 1,2 keeps label 1 and shifts 3 down to 2
    assert contract_edge(path(4), (1, 2)).edges == ((0, 1), (1, 2))


@given(graphs(min_n=2, max_n=9), st.randoms(use_true_random=False))
@settings(max_examples=200, deadline=None)
def test_contract_never_creates_loops_or_multi_edges(g, rnd):
    if not g.m:
        return
    u, v = rnd.choice(g.edges)
    h = contract_edge(g, (u, v))
    assert h.n == g.n - 1
    assert all(a < b for a, b in h.edges) and len(set(h.edges)) == h.m
    merged = u
    want = set()
    for x in (g.neighbors(u) | g.neighbors(v)) - {u, v}:
        want.add(x - 1 if x > v else x)
    assert h.neighbors(merged) == want


def test_components_examples():
    assert sorted(map(len, components(named("2P2")))) == [2, 2]
    assert len(components(named("C5"))) == 1
    assert components(Graph(3)) == [frozenset({0}), frozenset({1}), frozenset({2})]


def test_neighborhood_examples():
    assert neighborhood(named("C5"), {0}) == {1, 4}
    assert neighborhood(named("K4"), {0}, closed=True) == {0, 1, 2, 3}
    assert neighborhood(named("C5"), set()) == frozenset()


def test_isomorphism_examples():
    c5 = named("C5")
    assert iso(c5, relabel(c5, [3, 0, 4, 1, 2]))
    assert not iso(named("paw"), named("claw"))
    assert iso(k_skinny_ladder(3), gamma(2, 4, 4))
    with pytest.raises(CapabilityError):
        is_isomorphic(cycle(13), cycle(13))


@given(graphs(max_n=8), st.randoms(use_true_random=False))
@settings(max_examples=300, deadline=None)
def test_isomorphic_to_random_relabel(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    phi = is_isomorphic(g, h)
    assert phi is not None
    assert all(h.has_edge(phi[u], phi[v]) == g.has_edge(u, v) for u in range(g.n) for v in range(g.n) if u != v)


def test_isomorphism_agrees_with_networkx():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(1, 7)
        g = Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4])
        h = Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4])
        ng, nh = nx.Graph(), nx.Graph()
        ng.add_nodes_from(range(n)), nh.add_nodes_from(range(n))
        ng.add_edges_from(g.edges), nh.add_edges_from(h.edges)
        assert iso(g, h) == nx.is_isomorphic(ng, nh)


@pytest.mark.parametrize(
    "name,n,m",
    [("diamond", 4, 5), ("house", 5, 6), ("butterfly", 5, 6), ("gem", 5, 7), ("paw", 4, 4), ("claw", 4, 3), ("2P2", 4, 2), ("2K2", 4, 2), ("K_{2,3}", 5, 6), ("P4", 4, 3), ("C6", 6, 6), ("K5", 5, 10)],
)
def test_named_sizes(name, n, m):
    g = named(name)
    assert (g.n, g.m) == (n, m)


def test_named_definitions():
    assert iso(named("diamond"), Graph(4, [e for e in named("K4").edges if e != (2, 3)]))
    assert iso(named("butterfly"), complement(Graph(5, [(0, 2), (0, 3), (1, 2), (1, 3)])))
    with pytest.raises(GraphInputError):
        named("pentagram")


@given(graphs(max_n=10))
@settings(max_examples=200, deadline=None)
def test_graph_invariants(g):
    assert 2 * g.m == sum(g.degrees())
    for u in range(g.n):
        assert not g.has_edge(u, u)
        for v in g.neighbors(u):
            assert u in g.neighbors(v)
