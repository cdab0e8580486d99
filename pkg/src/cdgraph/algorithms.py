"""Connectivity, distances, blocks, degrees and the Euler test."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Any

from .graph import Edge, LabeledGraph, _bits

INFINITE = math.inf


def connected_components(g: LabeledGraph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest label."""
    seen = 0
    comps: list[list[int]] = []
    for i in range(g.n):
        if seen >> i & 1:
            continue
        comp = 1 << i
        frontier = 1 << i
        while frontier:
            nxt = 0
            for j in _bits(frontier):
                nxt |= g.rows[j]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(g.labels_of(comp))
    return comps


def is_connected(g: LabeledGraph) -> bool:
    return len(connected_components(g)) <= 1


def bfs_distances(g: LabeledGraph, source: int) -> dict[int, int]:
    """Shortest-path distances from ``source`` to every reachable vertex."""
    s = g.index(source)
    dist = {s: 0}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in _bits(g.rows[u]):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return {g.vertices[i]: d for i, d in dist.items()}


@dataclass(frozen=True)
class DistanceTable:
    vertices: tuple[int, ...]
    dist: dict[tuple[int, int], float]

    def __call__(self, u: int, v: int) -> float:
        return self.dist[(u, v)]

    def eccentricity(self, v: int) -> float:
        return max((self.dist[(v, w)] for w in self.vertices), default=0)

    def max(self) -> float:
        return max(self.dist.values(), default=0)


def distance_table(g: LabeledGraph) -> DistanceTable:
    table: dict[tuple[int, int], float] = {}
    for u in g.vertices:
        reach = bfs_distances(g, u)
        for v in g.vertices:
            table[(u, v)] = reach.get(v, INFINITE)
    return DistanceTable(g.vertices, table)


def eccentricity(g: LabeledGraph, v: int) -> float:
    reach = bfs_distances(g, v)
    if len(reach) < g.n:
        return INFINITE
    return max(reach.values())


def diameter(g: LabeledGraph) -> float:
    """Largest distance between two vertices; ``INFINITE`` if disconnected."""
    best: float = 0
    for v in g.vertices:
        e = eccentricity(g, v)
        if e == INFINITE:
            return INFINITE
        best = max(best, e)
    return best


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, articulation points and bridges of a graph.

    Blocks are sorted label tuples.  An isolated vertex forms a block of
    its own.
    """

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]
    bridges: tuple[Edge, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "blocks": [list(b) for b in self.blocks],
            "cut_vertices": list(self.cut_vertices),
            "bridges": [list(e) for e in self.bridges],
        }


def block_decomposition(g: LabeledGraph) -> BlockDecomposition:
    # Iterative Hopcroft-Tarjan on vertex indices.
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    cut = set()
    blocks: list[tuple[int, ...]] = []
    bridges: list[Edge] = []

    for root in range(n):
        if disc[root] != -1:
            continue
        if g.rows[root] == 0:
            disc[root] = timer
            timer += 1
            blocks.append((g.vertices[root],))
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(list(_bits(g.rows[root]))))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((w, u, iter(list(_bits(g.rows[w])))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                if parent != root:
                    cut.add(parent)
                members: set[int] = set()
                count = 0
                while True:
                    a, b = edge_stack.pop()
                    members.update((a, b))
                    count += 1
                    if (a, b) == (parent, u):
                        break
                blocks.append(tuple(sorted(g.vertices[i] for i in members)))
                if count == 1:
                    x, y = sorted((g.vertices[parent], g.vertices[u]))
                    bridges.append((x, y))
        if root_children > 1:
            cut.add(root)

    return BlockDecomposition(
        blocks=tuple(sorted(blocks)),
        cut_vertices=tuple(sorted(g.vertices[i] for i in cut)),
        bridges=tuple(sorted(bridges)),
    )


def is_block(g: LabeledGraph) -> bool:
    """Connected and without a cut vertex."""
    return g.n > 0 and is_connected(g) and not block_decomposition(g).cut_vertices


def degree_sequence(g: LabeledGraph) -> list[int]:
    return sorted((r.bit_count() for r in g.rows), reverse=True)


def is_k_regular(g: LabeledGraph, k: int) -> bool:
    return all(r.bit_count() == k for r in g.rows)


def is_regular(g: LabeledGraph) -> bool:
    return len({r.bit_count() for r in g.rows}) <= 1


def is_complete(g: LabeledGraph) -> bool:
    return is_k_regular(g, g.n - 1)


@dataclass(frozen=True)
class EulerResult:
    eulerian: bool
    reason: str

    def __bool__(self) -> bool:
        return self.eulerian


def is_eulerian_direct(g: LabeledGraph) -> EulerResult:
    """Connected with every degree even (closed trail through every edge)."""
    if g.n == 0 or not is_connected(g):
        return EulerResult(False, "disconnected")
    for v, r in zip(g.vertices, g.rows):
        if r.bit_count() % 2:
            return EulerResult(False, f"vertex {v} has odd degree {r.bit_count()}")
    return EulerResult(True, "connected and every degree even")
