import pytest
from hypothesis import given

from cdgraph import LabeledGraph, fixtures
from cdgraph.algorithms import diameter, is_eulerian_direct
from cdgraph.conditions import all_lewis_partitions
from cdgraph.errors import NotDiameterThree, StructureViolation
from cdgraph.eulerian import (
    NotApplicable,
    classify,
    classify_diameter_three,
    classify_sufficient,
    crosscheck,
)
from cdgraph.graph import first_primes

from conftest import graphs


def test_complete_odd():
    v = classify_sufficient(LabeledGraph.complete(first_primes(5)))
    assert v.eulerian and v.route == "complete-odd"


def test_complete_even_not_applicable():
    v = classify_sufficient(LabeledGraph.complete(first_primes(4)))
    assert isinstance(v, NotApplicable) and not v


@pytest.mark.parametrize("name", ["figure3a", "figure3c"])
def test_regular_route(name):
    v = classify_sufficient(fixtures.load(name))
    assert v.route == "regular-even" and v.eulerian


def test_regular_clause_requires_n_minus_2():
    # the 4-cycle is (n-2)-regular; the 6-cycle is regular but not
    assert classify_sufficient(LabeledGraph.from_edges([2, 3, 5, 7], [(2, 3), (3, 5), (5, 7), (2, 7)])).route == "regular-even"
    six = first_primes(6)
    hexagon = LabeledGraph.from_edges(six, [(six[i], six[(i + 1) % 6]) for i in range(6)])
    assert not classify_sufficient(hexagon)


def test_odd_blocks_route():
    bowtie = LabeledGraph.from_edges([2, 3, 5, 7, 11], [(2, 3), (3, 5), (2, 5), (5, 7), (7, 11), (5, 11)])
    v = classify_sufficient(bowtie)
    assert v.route == "odd-blocks" and v.eulerian


def test_figure2_not_eulerian():
    g = fixtures.load("figure2")
    assert not classify_sufficient(g)
    v = classify(g)
    assert not v.eulerian and v.route == "direct-only"


def test_figure4_eulerian_not_by_sufficient_route():
    g = fixtures.load("figure4")
    assert not classify_sufficient(g)
    assert classify(g).eulerian


def test_d3e_eulerian_both_modes():
    g = fixtures.load("d3e")
    v = classify_diameter_three(g)
    assert v.eulerian and v.mode == "bipartite-parity"
    assert [r.clause for r in v.reasons] == ["block", "odd-sides", "middle-layers-even-cross-degree"]
    assert not classify_diameter_three(g, "strict").eulerian


def test_d3c_fails_block_clause():
    v = classify_diameter_three(fixtures.load("d3c"))
    assert not v.eulerian and not v.reasons[0].passed


def test_d3o_fails_middle_clause():
    v = classify_diameter_three(fixtures.load("d3o"))
    assert not v.eulerian
    assert v.reasons[0].passed and v.reasons[1].passed and not v.reasons[2].passed


def test_not_diameter_three():
    with pytest.raises(NotDiameterThree):
        classify_diameter_three(fixtures.load("figure4"))


def test_bad_mode():
    with pytest.raises(ValueError):
        classify_diameter_three(fixtures.load("d3e"), "loose")


@given(graphs(max_n=8))
def test_sufficient_routes_never_overclaim(g):
    v = classify_sufficient(g)
    if v:
        assert is_eulerian_direct(g).eulerian


@given(graphs(min_n=4, max_n=8))
def test_bipartite_mode_matches_direct(g):
    if diameter(g) != 3:
        return
    direct = is_eulerian_direct(g).eulerian
    for _, _, p in all_lewis_partitions(g):
        if not isinstance(p, StructureViolation):
            assert classify_diameter_three(g, "bipartite", p).eulerian == direct


@given(graphs(max_n=8))
def test_crosscheck_agrees_in_default_mode(g):
    c = crosscheck(g)
    assert c.agree
    assert c.evidence == {}


def test_crosscheck_evidence_on_strict_disagreement():
    c = crosscheck(fixtures.load("d3e"), "strict")
    assert not c.agree
    assert c.evidence["partition"]["rho2"] == [3, 5]
