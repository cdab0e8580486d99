"""Labeled simple graphs whose vertices are prime numbers.

A :class:`LabeledGraph` stores one adjacency bitmask per vertex, indexed by
the position of the vertex in the ascending label order.  Graphs are
immutable; every operation returns a new value.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Mapping

from .errors import (
    DuplicateEdgeWarning,
    MalformedInput,
    NonPrimeLabel,
    SelfLoop,
    UnknownEndpoint,
    UnknownVertex,
)

Edge = tuple[int, int]


def is_prime(value: int) -> bool:
    if value < 2:
        return False
    if value < 4:
        return True
    if value % 2 == 0:
        return False
    d = 3
    while d * d <= value:
        if value % d == 0:
            return False
        d += 2
    return True


def first_primes(count: int, start: int = 2) -> list[int]:
    """The ``count`` smallest primes that are >= ``start``."""
    out: list[int] = []
    k = max(start, 2)
    while len(out) < count:
        if is_prime(k):
            out.append(k)
        k += 1
    return out


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class LabeledGraph:
    """Simple undirected graph on distinct integer labels.

    ``vertices`` is sorted ascending and ``rows[i]`` is the bitmask of
    neighbours of ``vertices[i]``.  Use :meth:`from_edges` rather than the
    raw constructor.
    """

    vertices: tuple[int, ...]
    rows: tuple[int, ...]
    _index: Mapping[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})

    @classmethod
    def from_edges(
        cls,
        vertices: Iterable[int],
        edges: Iterable[Iterable[int]] = (),
        *,
        check_primes: bool = True,
    ) -> LabeledGraph:
        labels = [int(v) for v in vertices]
        if len(set(labels)) != len(labels):
            raise MalformedInput(f"duplicate vertex labels in {labels}")
        for v in labels:
            if check_primes and not is_prime(v):
                raise NonPrimeLabel(f"vertex label {v} is not prime")
            if v < 1:
                raise MalformedInput(f"vertex label {v} is not a positive integer")
        ordered = tuple(sorted(labels))
        index = {v: i for i, v in enumerate(ordered)}
        rows = [0] * len(ordered)
        for edge in edges:
            u, v = edge
            if u == v:
                raise SelfLoop(f"self-loop at {u}")
            if u not in index or v not in index:
                raise UnknownEndpoint(f"edge ({u}, {v}) references an undeclared vertex")
            i, j = index[u], index[v]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(ordered, tuple(rows))

    @classmethod
    def from_rows(cls, vertices: Iterable[int], rows: Iterable[int]) -> LabeledGraph:
        return cls(tuple(vertices), tuple(rows))

    @classmethod
    def empty(cls, vertices: Iterable[int], **kw: Any) -> LabeledGraph:
        return cls.from_edges(vertices, (), **kw)

    @classmethod
    def complete(cls, vertices: Iterable[int], **kw: Any) -> LabeledGraph:
        labels = sorted(vertices)
        edges = [(u, v) for i, u in enumerate(labels) for v in labels[i + 1 :]]
        return cls.from_edges(labels, edges, **kw)

    # -- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def index(self, label: int) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownVertex(label) from None

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[self.index(u)] >> self.index(v) & 1)

    def neighbors(self, label: int) -> list[int]:
        return [self.vertices[j] for j in _bits(self.rows[self.index(label)])]

    def degree(self, label: int) -> int:
        return self.rows[self.index(label)].bit_count()

    def degrees(self) -> dict[int, int]:
        return {v: r.bit_count() for v, r in zip(self.vertices, self.rows)}

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for i, row in enumerate(self.rows):
            for j in _bits(row >> (i + 1)):
                out.append((self.vertices[i], self.vertices[i + 1 + j]))
        return out

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def mask_of(self, labels: Iterable[int]) -> int:
        m = 0
        for v in labels:
            m |= 1 << self.index(v)
        return m

    def labels_of(self, mask: int) -> list[int]:
        return [self.vertices[i] for i in _bits(mask)]

    # -- serialization -------------------------------------------------

    def to_dict(self, metadata: Mapping[str, Any] | None = None) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges()],
        }
        if metadata:
            doc["metadata"] = dict(metadata)
        return doc

    def to_json(self, metadata: Mapping[str, Any] | None = None) -> str:
        return json.dumps(self.to_dict(metadata), sort_keys=True)

    def to_dot(self, name: str | None = None) -> str:
        head = f"graph {name} {{" if name else "graph {"
        lines = [head]
        lines += [f"  {v};" for v in self.vertices]
        lines += [f"  {u} -- {v};" for u, v in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return f"LabeledGraph(n={self.n}, edges={self.edges()})"


def parse_document(text: str) -> tuple[dict[str, Any], dict[str, Any]]:
    """Validate the JSON shape and return ``(doc, metadata)``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise MalformedInput("expected an object with a 'vertices' list")
    vertices = doc["vertices"]
    edges = doc.get("edges", [])
    if not isinstance(vertices, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in vertices
    ):
        raise MalformedInput("'vertices' must be a list of integers")
    if not isinstance(edges, list):
        raise MalformedInput("'edges' must be a list of pairs")
    for e in edges:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise MalformedInput(f"bad edge entry {e!r}")
    metadata = doc.get("metadata") or {}
    if not isinstance(metadata, dict):
        raise MalformedInput("'metadata' must be an object")
    return doc, metadata


def parse_graph(text: str, *, check_primes: bool = True) -> LabeledGraph:
    """Parse edge-list JSON into a validated graph.

    Duplicate edges (in either orientation) are collapsed and reported with
    a :class:`DuplicateEdgeWarning`.
    """
    doc, _ = parse_document(text)
    seen: set[frozenset[int]] = set()
    edges = []
    for u, v in doc.get("edges", []):
        key = frozenset((u, v))
        if key in seen and u != v:
            warnings.warn(f"duplicate edge ({u}, {v}) collapsed", DuplicateEdgeWarning, stacklevel=2)
            continue
        seen.add(key)
        edges.append((u, v))
    return LabeledGraph.from_edges(doc["vertices"], edges, check_primes=check_primes)


def serialize_graph(g: LabeledGraph, metadata: Mapping[str, Any] | None = None) -> str:
    return g.to_json(metadata)


def complement(g: LabeledGraph) -> LabeledGraph:
    full = (1 << g.n) - 1
    rows = tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.rows))
    return LabeledGraph(g.vertices, rows)


def induced_subgraph(g: LabeledGraph, labels: Iterable[int]) -> LabeledGraph:
    keep = sorted(set(labels))
    idx = [g.index(v) for v in keep]
    rows = []
    for i in idx:
        row = g.rows[i]
        rows.append(sum(1 << k for k, j in enumerate(idx) if row >> j & 1))
    return LabeledGraph(tuple(keep), tuple(rows))


def relabel(g: LabeledGraph, mapping: Mapping[int, int], *, check_primes: bool = True) -> LabeledGraph:
    """Rename vertices through ``mapping`` (must be injective on ``g``)."""
    return LabeledGraph.from_edges(
        [mapping[v] for v in g.vertices],
        [(mapping[u], mapping[v]) for u, v in g.edges()],
        check_primes=check_primes,
    )
