import itertools

import pytest
from hypothesis import given, strategies as st

from cdgraph import LabeledGraph, canon, fixtures
from cdgraph.canon import _canon_py
from cdgraph.errors import TooLarge
from cdgraph.graph import first_primes

from conftest import graphs

HAS_EXT = canon.BACKEND == "cython"
needs_ext = pytest.mark.skipif(not HAS_EXT, reason="compiled kernel not built")


def brute_isomorphic(a, b):
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    ea = {frozenset(e) for e in a.edges()}
    for perm in itertools.permutations(b.vertices):
        m = dict(zip(a.vertices, perm))
        if all(frozenset((m[u], m[v])) in {frozenset(e) for e in b.edges()} for u, v in ea):
            return True
    return False


def brute_class_count(n):
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        edges = [p for k, p in enumerate(pairs) if mask >> k & 1]
        best = None
        for perm in itertools.permutations(range(n)):
            key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
            best = key if best is None or key < best else best
        seen.add(best)
    return len(seen)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 4), (4, 11)])
def test_brute_force_counts(n, count):
    assert brute_class_count(n) == count


@st.composite
def graph_and_shuffle(draw):
    g = draw(graphs(max_n=7))
    perm = draw(st.permutations(g.vertices))
    m = dict(zip(g.vertices, perm))
    h = LabeledGraph.from_edges(g.vertices, [(m[u], m[v]) for u, v in g.edges()])
    return g, h


@given(graph_and_shuffle())
def test_relabeling_invariance(pair):
    g, h = pair
    assert canon.canonical_form(g) == canon.canonical_form(h)


@given(graphs(max_n=5), graphs(max_n=5))
def test_forms_agree_with_brute_force(a, b):
    same = canon.canonical_form(a) == canon.canonical_form(b)
    assert same == brute_isomorphic(a, b)
    assert canon.are_isomorphic(a, b) == same


@given(graphs(max_n=8))
def test_python_kernel_matches_default(g):
    assert _canon_py.certificate(g.n, g.rows) == canon.certificate(g.n, g.rows)


@given(graphs(max_n=9))
def test_form_decodes_to_isomorphic_graph(g):
    form = canon.canonical_form(g)
    rebuilt = canon.graph_from_form(form)
    assert canon.canonical_form(rebuilt) == form
    assert sorted(rebuilt.degrees().values()) == sorted(g.degrees().values())


def test_canonical_labeling_reproduces_form():
    g = fixtures.load("figure2")
    order = canon.canonical_labeling(g)
    rows = [sum(1 << order.index(w) for w in g.neighbors(v)) for v in order]
    assert canon.cert_bytes(g.n, _canon_py.leaf_certificate(rows, range(g.n))) == canon.canonical_form(g)


@needs_ext
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_kernels_agree_on_every_mask(n):
    top = 1 << _canon_py.slot_count(n)
    assert canon.canon_range(n, 0, top, "python") == canon.canon_range(n, 0, top, "cython")


@needs_ext
def test_kernels_agree_on_n6_slice():
    assert canon.canon_range(6, 0, 4096, "python") == canon.canon_range(6, 0, 4096, "cython")


@pytest.mark.parametrize("backend", ["python", pytest.param("cython", marks=needs_ext)])
def test_class_counts_small(backend):
    counts = [len(canon.canon_range(n, 0, 1 << _canon_py.slot_count(n), backend)) for n in range(1, 6)]
    assert counts == [1, 2, 4, 11, 34]


def test_size_guard():
    big = LabeledGraph.empty(first_primes(13))
    with pytest.raises(TooLarge):
        canon.canonical_form(big)
    assert canon.canonical_form(big, max_n=None)[0] == 13


def test_symmetric_large_graphs_stay_fast():
    # complements of perfect matchings are highly symmetric
    for n in (12, 16, 20, 24):
        labels = first_primes(n)
        g = LabeledGraph.from_edges(
            labels, [(u, v) for i, u in enumerate(labels) for j, v in enumerate(labels) if i < j and j != i ^ 1]
        )
        h = LabeledGraph.from_edges(
            labels,
            [(u, v) for i, u in enumerate(labels) for j, v in enumerate(labels) if i < j and (i + j) % n != n - 1],
        )
        assert canon.canonical_form(g, max_n=None) == canon.canonical_form(h, max_n=None)


def test_non_isomorphic_same_degrees():
    six = first_primes(6)
    hexagon = LabeledGraph.from_edges(six, [(six[i], six[(i + 1) % 6]) for i in range(6)])
    triangles = LabeledGraph.from_edges(six, [(2, 3), (3, 5), (2, 5), (7, 11), (11, 13), (7, 13)])
    assert not canon.are_isomorphic(hexagon, triangles)


def test_kernel_lookup():
    assert canon.kernel("python") is _canon_py
    with pytest.raises(ValueError):
        canon.kernel("fortran")
