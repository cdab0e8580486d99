"""Analysis, construction and enumeration of candidate character degree
graphs of finite solvable groups."""

__version__ = "0.1.0"

from .graph import LabeledGraph, complement, induced_subgraph, parse_graph, serialize_graph

__all__ = [
    "LabeledGraph",
    "__version__",
    "complement",
    "induced_subgraph",
    "parse_graph",
    "serialize_graph",
]
