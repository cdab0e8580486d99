import math

import networkx as nx
from hypothesis import given

from cdgraph import LabeledGraph
from cdgraph.algorithms import (
    INFINITE,
    block_decomposition,
    connected_components,
    degree_sequence,
    diameter,
    distance_table,
    eccentricity,
    is_block,
    is_complete,
    is_eulerian_direct,
    is_k_regular,
    is_regular,
)
from cdgraph import fixtures

from conftest import graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    return h


@given(graphs())
def test_components_match_networkx(g):
    ours = connected_components(g)
    theirs = sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
    assert ours == theirs


@given(graphs(min_n=1))
def test_diameter_matches_networkx(g):
    h = to_nx(g)
    want = nx.diameter(h) if nx.is_connected(h) else INFINITE
    assert diameter(g) == want


@given(graphs())
def test_blocks_match_networkx(g):
    h = to_nx(g)
    bd = block_decomposition(g)
    assert sorted(bd.cut_vertices) == sorted(nx.articulation_points(h))
    assert sorted(bd.bridges) == sorted(tuple(sorted(e)) for e in nx.bridges(h))
    theirs = [sorted(c) for c in nx.biconnected_components(h)]
    theirs += [[v] for v in h if h.degree(v) == 0]
    assert sorted(map(list, bd.blocks)) == sorted(theirs)


@given(graphs())
def test_euler_matches_networkx(g):
    h = to_nx(g)
    want = g.n > 0 and nx.is_connected(h) and all(d % 2 == 0 for _, d in h.degree())
    assert bool(is_eulerian_direct(g)) == want


@given(graphs(min_n=1))
def test_distance_table_is_symmetric_metric(g):
    t = distance_table(g)
    for u in g.vertices:
        assert t(u, u) == 0
        for v in g.vertices:
            assert t(u, v) == t(v, u)
            for w in g.vertices:
                assert t(u, w) <= t(u, v) + t(v, w)


@given(graphs())
def test_degree_sequence_descending(g):
    seq = degree_sequence(g)
    assert seq == sorted(seq, reverse=True)
    assert is_regular(g) == (len(set(seq)) <= 1)


def test_figure2_structure():
    g = fixtures.load("figure2")
    bd = block_decomposition(g)
    assert diameter(g) == 2
    assert bd.cut_vertices == (11,)
    assert sorted(map(list, bd.blocks)) == [[2, 3, 5, 11], [7, 11, 13]]
    assert bd.bridges == ()
    assert not is_block(g)


def test_path_eccentricities():
    g = fixtures.load("figure1")
    assert [eccentricity(g, v) for v in g.vertices] == [3, 2, 2, 3]


def test_disconnected_diameter_is_infinite():
    g = fixtures.load("figure3b")
    assert diameter(g) == math.inf
    assert eccentricity(g, 17) == math.inf
    assert is_eulerian_direct(g).reason == "disconnected"


def test_odd_degree_reason_names_vertex():
    res = is_eulerian_direct(fixtures.load("figure1"))
    assert not res and "2" in str(res.reason)


def test_regular_predicates():
    assert is_k_regular(fixtures.load("figure3a"), 4)
    assert is_complete(LabeledGraph.complete([2, 3, 5]))
    assert not is_complete(fixtures.load("figure4"))
    assert is_block(fixtures.load("figure4"))
