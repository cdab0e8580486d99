"""Necessary conditions for a graph to be the character degree graph of a
finite solvable group, and the distance partition of diameter-3 graphs.

Passing :func:`necessary_pipeline` never certifies that a group exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .algorithms import (
    INFINITE,
    bfs_distances,
    block_decomposition,
    connected_components,
    diameter,
    distance_table,
    eccentricity,
    is_complete,
)
from .errors import BadBaseVertex, InconsistentWitness, NotDiameterThree, StructureViolation, UnknownVertex
from .graph import LabeledGraph, complement, induced_subgraph

# Citation tags name the published result a check comes from.
CITE_PALFY = "palfy-three-primes"
CITE_COMPONENTS = "manz-two-components"
CITE_DIAMETER = "diameter-at-most-three"
CITE_CUT_VERTEX = "lewis-one-cut-vertex"
CITE_CUT_EDGES = "at-most-two-cut-edges"
CITE_P4 = "four-vertex-path-excluded"
CITE_LEWIS = "lewis-diameter-three-partition"
CITE_BLOCK_PARTITION = "block-iff-two-in-middle-layers"
CITE_UNIQUE_CUT = "middle-layer-cut-vertex"


@dataclass(frozen=True)
class Condition:
    name: str
    passed: bool
    citation: str
    witness: Any = None

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "pass": self.passed, "citation": self.citation, "witness": self.witness}


@dataclass(frozen=True)
class CdgReport:
    conditions: tuple[Condition, ...]

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.conditions)

    @property
    def failures(self) -> list[str]:
        return [c.name for c in self.conditions if not c.passed]

    def __getitem__(self, name: str) -> Condition:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict[str, Any]:
        return {"overall": self.overall, "conditions": [c.to_dict() for c in self.conditions]}


@dataclass(frozen=True)
class PalfyResult:
    passed: bool
    witness: Optional[tuple[int, int, int]] = None

    def __bool__(self) -> bool:
        return self.passed


def palfy_condition(g: LabeledGraph) -> PalfyResult:
    """Every three vertices span at least one edge.

    Equivalently the complement has no triangle; on failure one
    independent triple is returned (the lexicographically smallest).
    """
    comp = complement(g).rows
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if not comp[i] >> j & 1:
                continue
            common = comp[i] & comp[j] & ~((1 << (j + 1)) - 1)
            if common:
                k = (common & -common).bit_length() - 1
                return PalfyResult(False, (g.vertices[i], g.vertices[j], g.vertices[k]))
    return PalfyResult(True)


def _missing_edge(g: LabeledGraph, labels: list[int]) -> Optional[list[int]]:
    for a, u in enumerate(labels):
        for v in labels[a + 1 :]:
            if not g.has_edge(u, v):
                return [u, v]
    return None


def is_p4(g: LabeledGraph) -> bool:
    """Whole-graph isomorphism to the path on four vertices."""
    if g.n != 4 or g.edge_count != 3:
        return False
    return sorted(g.degrees().values()) == [1, 1, 2, 2] and len(connected_components(g)) == 1


def necessary_pipeline(g: LabeledGraph) -> CdgReport:
    """Run every necessary condition in a fixed order and report all of them."""
    out: list[Condition] = []
    palfy = palfy_condition(g)
    out.append(Condition("palfy", palfy.passed, CITE_PALFY, list(palfy.witness) if palfy.witness else None))

    comps = connected_components(g)
    out.append(
        Condition("component_count", len(comps) <= 2, CITE_COMPONENTS, {"components": comps})
    )

    witness = None
    if len(comps) == 2:
        for comp in comps:
            missing = _missing_edge(g, comp)
            if missing:
                witness = {"component": comp, "missing_edge": missing}
                break
    out.append(Condition("two_components_both_complete", witness is None, CITE_PALFY, witness))

    if len(comps) == 1 and g.n > 0:
        table = distance_table(g)
        d = table.max()
        far = None
        if d > 3:
            far = next([u, v, d] for (u, v), x in sorted(table.dist.items()) if x == d)
        out.append(Condition("diameter_bound", d <= 3, CITE_DIAMETER, far or {"diameter": d}))
    else:
        out.append(Condition("diameter_bound", True, CITE_DIAMETER, {"diameter": None}))

    blocks = block_decomposition(g)
    out.append(
        Condition(
            "cut_vertex_bound",
            len(blocks.cut_vertices) <= 1,
            CITE_CUT_VERTEX,
            {"cut_vertices": list(blocks.cut_vertices)},
        )
    )
    out.append(
        Condition(
            "cut_edge_bound",
            len(blocks.bridges) <= 2,
            CITE_CUT_EDGES,
            {"bridges": [list(e) for e in blocks.bridges]},
        )
    )
    p4 = is_p4(g)
    out.append(Condition("not_p4", not p4, CITE_P4, [list(e) for e in g.edges()] if p4 else None))
    return CdgReport(tuple(out))


# -- diameter-3 partition ------------------------------------------------

LEWIS_CLAUSES = (
    "partition_covers_vertices",
    "low_side_complete",
    "high_side_complete",
    "rho1_not_adjacent_high_side",
    "rho4_not_adjacent_low_side",
    "rho2_has_rho3_neighbor",
    "rho3_has_rho2_neighbor",
)


@dataclass(frozen=True)
class LewisPartition:
    """Distance layers from a base vertex ``r`` of eccentricity 3.

    ``rho1 | rho2`` and ``rho3 | rho4`` must both be cliques, ``rho1`` sees
    nothing in ``rho3 | rho4``, ``rho4`` sees nothing in ``rho1 | rho2``,
    and every vertex of the middle layers has a neighbour in the other
    middle layer.  ``evidence`` records each rule as checked.
    """

    r: int
    s: int
    rho1: tuple[int, ...]
    rho2: tuple[int, ...]
    rho3: tuple[int, ...]
    rho4: tuple[int, ...]
    evidence: dict[str, bool] = field(default_factory=dict, compare=False)

    @property
    def low(self) -> tuple[int, ...]:
        return tuple(sorted(self.rho1 + self.rho2))

    @property
    def high(self) -> tuple[int, ...]:
        return tuple(sorted(self.rho3 + self.rho4))

    def to_dict(self) -> dict[str, Any]:
        return {
            "r": self.r,
            "s": self.s,
            "rho1": list(self.rho1),
            "rho2": list(self.rho2),
            "rho3": list(self.rho3),
            "rho4": list(self.rho4),
            "evidence": dict(self.evidence),
        }


def _check_lewis(g: LabeledGraph, rho1, rho2, rho3, rho4) -> tuple[dict[str, bool], dict[str, Any]]:
    evidence: dict[str, bool] = {}
    witnesses: dict[str, Any] = {}

    def record(name: str, witness: Any) -> None:
        evidence[name] = witness is None
        if witness is not None:
            witnesses[name] = witness

    every = sorted(rho1 + rho2 + rho3 + rho4)
    record("partition_covers_vertices", None if every == list(g.vertices) else every)
    record("low_side_complete", _missing_edge(g, sorted(rho1 + rho2)))
    record("high_side_complete", _missing_edge(g, sorted(rho3 + rho4)))
    high = set(rho3 + rho4)
    low = set(rho1 + rho2)
    record(
        "rho1_not_adjacent_high_side",
        next(([u, v] for u in rho1 for v in g.neighbors(u) if v in high), None),
    )
    record(
        "rho4_not_adjacent_low_side",
        next(([u, v] for u in rho4 for v in g.neighbors(u) if v in low), None),
    )
    s3, s2 = set(rho3), set(rho2)
    record("rho2_has_rho3_neighbor", next((u for u in rho2 if not s3 & set(g.neighbors(u))), None))
    record("rho3_has_rho2_neighbor", next((u for u in rho3 if not s2 & set(g.neighbors(u))), None))
    return evidence, witnesses


def lewis_partition(g: LabeledGraph, r: Optional[int] = None, s: Optional[int] = None) -> LewisPartition:
    """Distance partition of a diameter-3 graph from base vertex ``r``.

    ``r`` defaults to the smallest label of eccentricity 3 and ``s`` to the
    smallest vertex at distance 3 from ``r``.  Raises
    :class:`StructureViolation` naming the first broken rule.
    """
    d = diameter(g)
    if d != 3:
        raise NotDiameterThree(f"diameter is {d}, not 3")
    if r is None:
        r = next(v for v in g.vertices if eccentricity(g, v) == 3)
    elif r not in g:
        raise UnknownVertex(r)
    elif eccentricity(g, r) != 3:
        raise BadBaseVertex(f"vertex {r} has eccentricity {eccentricity(g, r)}, not 3")

    dist = bfs_distances(g, r)
    rho4 = tuple(v for v in g.vertices if dist[v] == 3)
    rho3 = tuple(v for v in g.vertices if dist[v] == 2)
    s3 = set(rho3)
    rho2 = tuple(v for v in g.vertices if dist[v] == 1 and s3 & set(g.neighbors(v)))
    rho1 = tuple(v for v in g.vertices if dist[v] == 0 or (dist[v] == 1 and v not in rho2))
    if s is None:
        s = rho4[0]
    elif s not in rho4:
        raise BadBaseVertex(f"vertex {s} is not at distance 3 from {r}")

    evidence, witnesses = _check_lewis(g, rho1, rho2, rho3, rho4)
    for clause in LEWIS_CLAUSES:
        if not evidence[clause]:
            raise StructureViolation(clause, witnesses[clause])
    return LewisPartition(r, s, rho1, rho2, rho3, rho4, evidence)


def all_lewis_partitions(g: LabeledGraph) -> list[tuple[int, int, LewisPartition | StructureViolation]]:
    """One entry per ordered diametral pair ``(r, s)`` with ``d(r, s) = 3``."""
    if diameter(g) != 3:
        raise NotDiameterThree(f"diameter is {diameter(g)}, not 3")
    out: list[tuple[int, int, LewisPartition | StructureViolation]] = []
    for r in g.vertices:
        dist = bfs_distances(g, r)
        for s in g.vertices:
            if dist[s] != 3:
                continue
            try:
                out.append((r, s, lewis_partition(g, r, s)))
            except StructureViolation as exc:
                out.append((r, s, exc))
    return out


def block_by_partition(p: LewisPartition) -> bool:
    """A valid diameter-3 partition describes a block iff both middle layers
    have at least two vertices."""
    return len(p.rho2) >= 2 and len(p.rho3) >= 2


def cut_vertex_by_partition(p: LewisPartition, g: LabeledGraph) -> Optional[int]:
    """The cut vertex predicted by the partition, checked against the graph.

    With a single vertex in ``rho2`` that vertex must be the only
    articulation point; with two or more the graph must have none.
    """
    cuts = block_decomposition(g).cut_vertices
    if len(p.rho2) == 1:
        (only,) = p.rho2
        if cuts != (only,):
            raise InconsistentWitness(
                f"partition predicts unique cut vertex {only}, graph has {list(cuts)}"
            )
        return only
    if cuts:
        raise InconsistentWitness(f"partition predicts no cut vertex, graph has {list(cuts)}")
    return None


def blocks_bounded(g: LabeledGraph, limit: int = 2) -> bool:
    """At most ``limit`` blocks.  Follows from the three-prime condition plus a
    single cut vertex; checked as a property, not part of the pipeline."""
    return len(block_decomposition(g).blocks) <= limit


def complete_components(g: LabeledGraph) -> bool:
    return all(is_complete(induced_subgraph(g, c)) for c in connected_components(g))


__all__ = [
    "INFINITE",
    "CdgReport",
    "Condition",
    "LewisPartition",
    "PalfyResult",
    "all_lewis_partitions",
    "block_by_partition",
    "blocks_bounded",
    "complete_components",
    "cut_vertex_by_partition",
    "is_p4",
    "lewis_partition",
    "necessary_pipeline",
    "palfy_condition",
]
