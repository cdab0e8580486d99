import itertools

import pytest
from hypothesis import settings, strategies as st

from cdgraph import LabeledGraph
from cdgraph.graph import first_primes

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

PRIMES = first_primes(16)


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    labels = sorted(draw(st.lists(st.sampled_from(PRIMES), min_size=n, max_size=n, unique=True)))
    pairs = list(itertools.combinations(labels, 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return LabeledGraph.from_edges(labels, [e for e, k in zip(pairs, keep) if k])


def graph(vertices, edges):
    return LabeledGraph.from_edges(vertices, edges)


@pytest.fixture
def tmp_graph_file(tmp_path):
    def write(g, name="g.json"):
        path = tmp_path / name
        path.write_text(g.to_json())
        return str(path)

    return write
