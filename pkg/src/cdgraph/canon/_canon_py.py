"""Pure-Python canonical labeling kernel.

The canonical certificate of a graph is the maximum, over all leaves of
the individualization/refinement search tree, of the adjacency bitstring
read in the leaf's vertex order.  Pruning (twin vertices, automorphism
orbits, first-leaf jumps) only discards leaves whose certificate already
occurs elsewhere in the tree, so every sound implementation of the same
tree returns the same number.  The compiled kernel relies on that.

Edge slots for ``n`` vertices are the pairs ``(i, j)``, ``i < j``, in
row-major order.  In an enumeration *mask* slot ``k`` is bit ``k``; in a
*certificate* slot ``k`` is bit ``m - 1 - k`` (``m`` slots), so integer
comparison of certificates is lexicographic comparison of slot strings.
"""

from __future__ import annotations

from typing import Sequence

Cells = list[list[int]]


def slot_count(n: int) -> int:
    return n * (n - 1) // 2


def mask_to_rows(n: int, mask: int) -> list[int]:
    rows = [0] * n
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if mask >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return rows


def cert_to_rows(n: int, cert: int) -> list[int]:
    m = slot_count(n)
    rows = [0] * n
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if cert >> (m - 1 - k) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return rows


def leaf_certificate(rows: Sequence[int], order: Sequence[int]) -> int:
    cert = 0
    n = len(order)
    for i in range(n):
        row = rows[order[i]]
        for j in range(i + 1, n):
            cert = (cert << 1) | (row >> order[j] & 1)
    return cert


def refine(rows: Sequence[int], cells: Cells) -> Cells:
    """Split cells by neighbour counts into every cell until stable.

    Sub-cells are ordered by their count vector, vertices inside a cell
    ascending.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: Cells = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = rows[v]
                sig = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                out.append(sorted(groups[sig]))
        if len(out) == len(cells):
            return out
        cells = out


def _twins(rows: Sequence[int], v: int, w: int) -> bool:
    return rows[v] & ~(1 << w) == rows[w] & ~(1 << v)


class _Orbits:
    """Union-find over vertices for a set of permutations."""

    def __init__(self, n: int, perms: list[tuple[int, ...]]):
        self.parent = list(range(n))
        for p in perms:
            for v, w in enumerate(p):
                self._union(v, w)

    def find(self, v: int) -> int:
        parent = self.parent
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def _union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


class _Search:
    def __init__(self, rows: Sequence[int]):
        self.rows = rows
        self.n = len(rows)
        self.first_order: list[int] | None = None
        self.first_cert = -1
        self.best_order: list[int] | None = None
        self.best_cert = -1
        self.automorphisms: list[tuple[int, ...]] = []
        self.leaves = 0

    def _record_aut(self, src: Sequence[int], dst: Sequence[int]) -> None:
        perm = [0] * self.n
        for a, b in zip(src, dst):
            perm[a] = b
        t = tuple(perm)
        if any(t[i] != i for i in range(self.n)):
            self.automorphisms.append(t)

    def leaf(self, cells: Cells, diverged_at: int | None) -> int | None:
        self.leaves += 1
        order = [c[0] for c in cells]
        cert = leaf_certificate(self.rows, order)
        if self.first_order is None:
            self.first_order = self.best_order = order
            self.first_cert = self.best_cert = cert
            return None
        if cert == self.first_cert:
            self._record_aut(self.first_order, order)
            return diverged_at
        if cert > self.best_cert:
            self.best_cert, self.best_order = cert, order
        elif cert == self.best_cert:
            assert self.best_order is not None
            self._record_aut(self.best_order, order)
        return None

    def run(self, cells: Cells, prefix: list[int], diverged_at: int | None) -> int | None:
        """Explore a node; return a depth to jump back to, or None."""
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            return self.leaf(cells, diverged_at)
        depth = len(prefix)
        rows = self.rows
        cell = cells[target]
        candidates: list[int] = []
        for v in cell:
            if not any(_twins(rows, v, w) for w in candidates):
                candidates.append(v)
        explored: list[int] = []
        for v in candidates:
            if explored:
                fixing = [
                    p for p in self.automorphisms if all(p[x] == x for x in prefix)
                ]
                if fixing:
                    orb = _Orbits(self.n, fixing)
                    rv = orb.find(v)
                    if any(orb.find(u) == rv for u in explored):
                        continue
            child = cells[:target] + [[v], [w for w in cell if w != v]] + cells[target + 1 :]
            child = refine(rows, child)
            if diverged_at is None and explored:
                child_div: int | None = depth
            else:
                child_div = diverged_at
            jump = self.run(child, prefix + [v], child_div)
            explored.append(v)
            if jump is not None and jump < depth:
                return jump
        return None


def canonical_search(rows: Sequence[int]) -> tuple[int, list[int], list[tuple[int, ...]]]:
    """Return ``(certificate, canonical_order, automorphisms_found)``."""
    n = len(rows)
    if n == 0:
        return 0, [], []
    s = _Search(rows)
    s.run(refine(rows, [list(range(n))]), [], None)
    assert s.best_order is not None
    return s.best_cert, s.best_order, s.automorphisms


def certificate(n: int, rows: Sequence[int]) -> int:
    if n != len(rows):
        raise ValueError("row count does not match n")
    return canonical_search(rows)[0]


def certificate_of_mask(n: int, mask: int) -> int:
    return certificate(n, mask_to_rows(n, mask))


def canon_range(n: int, lo: int, hi: int) -> set[int]:
    """Certificates of every labeled graph whose edge mask lies in [lo, hi)."""
    found: set[int] = set()
    for mask in range(lo, hi):
        found.add(certificate(n, mask_to_rows(n, mask)))
    return found
