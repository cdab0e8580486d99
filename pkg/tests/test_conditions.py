import itertools

import pytest
from hypothesis import given

from cdgraph import LabeledGraph, fixtures
from cdgraph.algorithms import block_decomposition, diameter
from cdgraph.conditions import (
    LEWIS_CLAUSES,
    all_lewis_partitions,
    block_by_partition,
    cut_vertex_by_partition,
    is_p4,
    lewis_partition,
    necessary_pipeline,
    palfy_condition,
)
from cdgraph.errors import BadBaseVertex, NotDiameterThree, StructureViolation, UnknownVertex

from conftest import graphs

PIPELINE_ORDER = [
    "palfy",
    "component_count",
    "two_components_both_complete",
    "diameter_bound",
    "cut_vertex_bound",
    "cut_edge_bound",
    "not_p4",
]


@given(graphs())
def test_palfy_matches_triple_scan(g):
    bad = [t for t in itertools.combinations(g.vertices, 3) if not any(g.has_edge(u, v) for u, v in itertools.combinations(t, 2))]
    res = palfy_condition(g)
    assert res.passed == (not bad)
    if bad:
        assert res.witness == bad[0]


@given(graphs())
def test_pipeline_reports_every_condition_in_order(g):
    report = necessary_pipeline(g)
    assert [c.name for c in report.conditions] == PIPELINE_ORDER
    assert report.overall == all(c.passed for c in report.conditions)
    assert report.failures == [c.name for c in report.conditions if not c.passed]


def test_figure1_fails_on_p4_and_reports_everything():
    report = necessary_pipeline(fixtures.load("figure1"))
    assert not report.overall
    assert report.failures == ["cut_vertex_bound", "cut_edge_bound", "not_p4"]
    assert report["not_p4"].citation == "four-vertex-path-excluded"


@pytest.mark.parametrize("name", ["figure2", "figure3a", "figure3b", "figure3c", "figure4", "d3e", "d3c", "d3o"])
def test_figures_pass_pipeline(name):
    assert necessary_pipeline(fixtures.load(name)).overall


def test_three_components_fail():
    g = LabeledGraph.empty([2, 3, 5])
    report = necessary_pipeline(g)
    assert report.failures == ["palfy", "component_count"]
    assert report["palfy"].witness == [2, 3, 5]


def test_incomplete_component_witness():
    g = LabeledGraph.from_edges([2, 3, 5, 7], [(3, 5), (5, 7)])
    report = necessary_pipeline(g)
    assert not report["two_components_both_complete"].passed
    assert report["two_components_both_complete"].witness["missing_edge"] == [3, 7]


def test_diameter_four_witness():
    path = LabeledGraph.from_edges([2, 3, 5, 7, 11], [(2, 3), (3, 5), (5, 7), (7, 11)])
    c = necessary_pipeline(path)["diameter_bound"]
    assert not c.passed and c.witness == [2, 11, 4]


def test_is_p4_whole_graph_only():
    assert is_p4(fixtures.load("figure1"))
    assert not is_p4(fixtures.load("d3c"))


def test_d3e_partition():
    p = lewis_partition(fixtures.load("d3e"))
    assert (p.r, p.s) == (2, 13)
    assert (p.rho1, p.rho2, p.rho3, p.rho4) == ((2,), (3, 5), (7, 11), (13,))
    assert all(p.evidence[c] for c in LEWIS_CLAUSES)
    assert block_by_partition(p)
    assert cut_vertex_by_partition(p, fixtures.load("d3e")) is None


def test_d3c_partition_predicts_cut_vertex():
    g = fixtures.load("d3c")
    p = lewis_partition(g)
    assert p.rho2 == (3,)
    assert not block_by_partition(p)
    assert cut_vertex_by_partition(p, g) == 3


def test_partition_errors():
    g = fixtures.load("d3e")
    with pytest.raises(NotDiameterThree):
        lewis_partition(fixtures.load("figure2"))
    with pytest.raises(UnknownVertex):
        lewis_partition(g, 17)
    with pytest.raises(BadBaseVertex):
        lewis_partition(g, 3)
    with pytest.raises(BadBaseVertex):
        lewis_partition(g, 2, 11)


def test_structure_violation_names_clause():
    # diameter 3 but the far side is not a clique
    g = LabeledGraph.from_edges([2, 3, 5, 7, 11], [(2, 3), (3, 5), (3, 7), (5, 11), (7, 11)])
    with pytest.raises(StructureViolation) as err:
        lewis_partition(g)
    assert err.value.clause in LEWIS_CLAUSES


def test_all_partitions_cover_diametral_pairs():
    g = fixtures.load("d3e")
    pairs = [(r, s) for r, s, _ in all_lewis_partitions(g)]
    assert pairs == [(2, 13), (13, 2)]


@given(graphs(min_n=4, max_n=7))
def test_partition_rules_hold_whenever_built(g):
    if diameter(g) != 3:
        return
    for _, _, p in all_lewis_partitions(g):
        if isinstance(p, StructureViolation):
            continue
        assert sorted(p.rho1 + p.rho2 + p.rho3 + p.rho4) == list(g.vertices)
        assert block_by_partition(p) == (not block_decomposition(g).cut_vertices)
