"""Exhaustive enumeration of small graphs up to isomorphism.

Every labeled graph on ``n`` vertices is visited as an edge bitmask; the
mask space is cut into contiguous chunks, each chunk is reduced to a set of
canonical certificates, and the sets are merged.  The merge sorts by
canonical form, so the result does not depend on worker count or chunk
order.
"""

from __future__ import annotations

import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Iterable, Iterator, Optional

from . import canon
from .algorithms import (
    INFINITE,
    block_decomposition,
    connected_components,
    degree_sequence,
    diameter,
    is_eulerian_direct,
    is_regular,
)
from .conditions import (
    LewisPartition,
    all_lewis_partitions,
    complete_components,
    is_p4,
    necessary_pipeline,
    palfy_condition,
)
from .errors import BadN, StructureViolation, UnknownFilter
from .eulerian import EulerianVerdict, classify_diameter_three, classify_sufficient

log = logging.getLogger(__name__)

MAX_N = 8
DEFAULT_CHUNK = 1 << 16


@dataclass(frozen=True)
class CatalogEntry:
    n: int
    canonical: str
    degree_sequence: tuple[int, ...]
    flags: dict[str, Any]
    source: str = "enumerated"

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "canonical": self.canonical,
            "degree_sequence": list(self.degree_sequence),
            "flags": self.flags,
            "source": self.source,
        }


def entry_flags(g) -> dict[str, Any]:
    comps = connected_components(g)
    d = diameter(g)
    blocks = block_decomposition(g)
    pipeline = necessary_pipeline(g)
    direct = is_eulerian_direct(g).eulerian
    suff = classify_sufficient(g)
    route = suff.route if isinstance(suff, EulerianVerdict) else None
    d3: Optional[bool] = None
    if d == 3:
        try:
            d3 = classify_diameter_three(g).eulerian
        except StructureViolation:
            d3 = None
    return {
        "palfy": palfy_condition(g).passed,
        "components": len(comps),
        "diameter": None if d == INFINITE else int(d),
        "cut_vertices": len(blocks.cut_vertices),
        "cut_edges": len(blocks.bridges),
        "blocks": len(blocks.blocks),
        "p4_free": not is_p4(g),
        "pipeline_pass": pipeline.overall,
        "eulerian_direct": direct,
        "sufficient_route": route,
        "diameter_three_verdict": d3,
        "regular": is_regular(g),
    }


FILTERS: dict[str, Callable[[dict[str, Any]], bool]] = {
    "palfy": lambda f: f["palfy"],
    "connected": lambda f: f["components"] == 1,
    "two_components": lambda f: f["components"] == 2,
    "pipeline": lambda f: f["pipeline_pass"],
    "p4_free": lambda f: f["p4_free"],
    "eulerian": lambda f: f["eulerian_direct"],
    "block": lambda f: f["components"] == 1 and f["cut_vertices"] == 0,
    "regular": lambda f: f["regular"],
    "non_regular": lambda f: not f["regular"],
    "diameter2": lambda f: f["diameter"] == 2,
    "diameter3": lambda f: f["diameter"] == 3,
}


def parse_filters(selection: Iterable[str] | str | None) -> list[str]:
    if selection is None:
        return []
    if isinstance(selection, str):
        selection = selection.split(",")
    names = [s.strip() for s in selection if s.strip()]
    unknown = [s for s in names if s not in FILTERS]
    if unknown:
        raise UnknownFilter(f"unknown filter(s) {unknown}; known: {', '.join(sorted(FILTERS))}")
    return names


def check_n(n: int, allow_large: bool = False, limit: int = MAX_N) -> None:
    if not 1 <= n <= limit:
        raise BadN(f"n must be in 1..{limit}, got {n}")
    if n == 8 and limit == MAX_N and not allow_large:
        raise BadN("n = 8 visits 2^28 graphs; pass allow_large=True (--allow-n8) to opt in")


def chunks(n: int, size: int = DEFAULT_CHUNK, start: int = 0) -> list[tuple[int, int]]:
    total = 1 << (n * (n - 1) // 2)
    return [(lo, min(lo + size, total)) for lo in range(start, total, size)]


# -- checkpoints ---------------------------------------------------------


def write_checkpoint(path: Path, n: int, done: int, certs: set[int]) -> None:
    tmp = Path(str(path) + ".tmp")
    lines = [f"n {n}", f"done 0 {done}"] + [format(c, "x") for c in sorted(certs)]
    tmp.write_text("\n".join(lines) + "\n")
    os.replace(tmp, path)


def read_checkpoint(path: Path, n: int) -> tuple[int, set[int]]:
    lines = path.read_text().split()
    it = iter(lines)
    pairs = []
    for tok in it:
        if tok == "n":
            pairs.append(("n", int(next(it))))
        elif tok == "done":
            lo, hi = int(next(it)), int(next(it))
            pairs.append(("done", (lo, hi)))
        else:
            pairs.append(("cert", int(tok, 16)))
    got_n = next(v for k, v in pairs if k == "n")
    if got_n != n:
        raise ValueError(f"checkpoint is for n={got_n}, not {n}")
    _, done = next(v for k, v in pairs if k == "done")
    return done, {v for k, v in pairs if k == "cert"}


# -- the sweep over masks -------------------------------------------------


def _work(args: tuple[int, int, int, Optional[str]]) -> set[int]:
    n, lo, hi, backend = args
    return canon.canon_range(n, lo, hi, backend)


def collect_certificates(
    n: int,
    workers: int = 1,
    checkpoint: Optional[Path] = None,
    chunk_size: int = DEFAULT_CHUNK,
    backend: Optional[str] = None,
    progress: bool = False,
    stop_after: Optional[int] = None,
    stats: Optional[dict[str, int]] = None,
) -> set[int]:
    """Canonical certificates of all graphs on ``n`` vertices.

    With ``checkpoint`` the completed prefix of the mask space and the
    certificates found so far are saved after each chunk and picked up on
    the next call.  ``stop_after`` ends the run after that many chunks
    (used to simulate an interruption).  ``stats["visited"]`` receives the
    number of masks covered, including any resumed prefix.
    """
    start, found = 0, set()
    if checkpoint is not None and Path(checkpoint).exists():
        start, found = read_checkpoint(Path(checkpoint), n)
    todo = chunks(n, chunk_size, start)
    if stop_after is not None:
        todo = todo[:stop_after]
    jobs = [(n, lo, hi, backend) for lo, hi in todo]
    total = 1 << (n * (n - 1) // 2)

    def results() -> Iterator[set[int]]:
        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=workers) as ex:
                yield from ex.map(_work, jobs)
        else:
            yield from map(_work, jobs)

    visited = start
    for (lo, hi), part in zip(todo, results()):
        found |= part
        visited += hi - lo
        if checkpoint is not None:
            write_checkpoint(Path(checkpoint), n, hi, found)
        if progress:
            print(f"\r[{hi}/{total}] {len(found)} classes", end="", file=sys.stderr, flush=True)
    if progress:
        print(file=sys.stderr)
    if stats is not None:
        stats["visited"] = visited
    return found


@dataclass
class EnumerationResult:
    n: int
    entries: list[CatalogEntry]
    total_classes: int
    labeled_graphs: int
    filters: list[str] = field(default_factory=list)

    def summary(self) -> dict[str, Any]:
        counts: dict[str, dict[str, int]] = {}
        for e in self.entries:
            for k, v in e.flags.items():
                hist = counts.setdefault(k, {})
                key = json.dumps(v)
                hist[key] = hist.get(key, 0) + 1
        return {
            "n": self.n,
            "labeled_graphs": self.labeled_graphs,
            "classes": self.total_classes,
            "filters": self.filters,
            "matched": len(self.entries),
            "flag_counts": {k: dict(sorted(v.items())) for k, v in sorted(counts.items())},
        }

    def jsonl(self) -> str:
        return "".join(json.dumps(e.to_dict(), sort_keys=True) + "\n" for e in self.entries)


def enumerate_graphs(
    n: int,
    filters: Iterable[str] | str | None = None,
    *,
    workers: int = 1,
    checkpoint: Optional[Path] = None,
    allow_large: bool = False,
    backend: Optional[str] = None,
    progress: bool = False,
    chunk_size: int = DEFAULT_CHUNK,
) -> EnumerationResult:
    names = parse_filters(filters)
    check_n(n, allow_large)
    stats: dict[str, int] = {}
    certs = collect_certificates(n, workers, checkpoint, chunk_size, backend, progress, stats=stats)
    forms = sorted(canon.cert_bytes(n, c) for c in certs)
    entries = []
    for form in forms:
        g = canon.graph_from_form(form)
        flags = entry_flags(g)
        if all(FILTERS[f](flags) for f in names):
            entries.append(CatalogEntry(n, form.hex(), tuple(degree_sequence(g)), flags))
    return EnumerationResult(n, entries, len(forms), stats["visited"], names)


def iter_classes(n: int, **kw: Any) -> Iterator[tuple[bytes, Any]]:
    """Canonical form and representative graph for every class on ``n`` vertices."""
    check_n(n, kw.pop("allow_large", False))
    certs = collect_certificates(n, **kw)
    for form in sorted(canon.cert_bytes(n, c) for c in certs):
        yield form, canon.graph_from_form(form)


# -- validation sweep ----------------------------------------------------


SWEEP_CHECKS = (
    "sufficient_soundness",
    "diameter_three_equivalence",
    "non_block_diameter_three_not_eulerian",
    "pipeline_structure",
    "two_components_complete",
)


@dataclass
class SweepReport:
    n: int
    classes: int
    checked: dict[str, int]
    violations: dict[str, list[dict[str, Any]]]
    strict_disagreements: list[dict[str, Any]]

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "classes": self.classes,
            "ok": self.ok,
            "checked": self.checked,
            "violations": self.violations,
            "strict_disagreements": len(self.strict_disagreements),
        }


def sweep_validate(
    n: int, *, workers: int = 1, allow_large: bool = False, backend: Optional[str] = None
) -> SweepReport:
    """Check the structural properties on every class with ``n`` vertices.

    Diameter-3 graphs are checked against the partition from every valid
    base vertex, not only the default one.
    """
    check_n(n, allow_large, limit=MAX_N if allow_large else 7)
    checked = {k: 0 for k in SWEEP_CHECKS}
    violations: dict[str, list[dict[str, Any]]] = {k: [] for k in SWEEP_CHECKS}
    strict: list[dict[str, Any]] = []
    classes = 0
    for form, g in iter_classes(n, workers=workers, backend=backend, allow_large=allow_large):
        classes += 1
        direct = is_eulerian_direct(g).eulerian
        evidence = {"canonical": form.hex(), "graph": g.to_dict()}

        suff = classify_sufficient(g)
        if isinstance(suff, EulerianVerdict):
            checked["sufficient_soundness"] += 1
            if not direct:
                violations["sufficient_soundness"].append({**evidence, "verdict": suff.to_dict()})

        if diameter(g) == 3:
            for r, s, part in all_lewis_partitions(g):
                if not isinstance(part, LewisPartition):
                    continue
                v = classify_diameter_three(g, "bipartite", part)
                checked["diameter_three_equivalence"] += 1
                if v.eulerian != direct:
                    violations["diameter_three_equivalence"].append({**evidence, "r": r, "s": s, "verdict": v.to_dict()})
                if len(part.rho2) < 2 or len(part.rho3) < 2:
                    checked["non_block_diameter_three_not_eulerian"] += 1
                    if direct:
                        violations["non_block_diameter_three_not_eulerian"].append({**evidence, "r": r, "s": s})
                sv = classify_diameter_three(g, "strict", part)
                if sv.eulerian != direct:
                    strict.append({**evidence, "r": r, "s": s, "verdict": sv.to_dict()})

        if necessary_pipeline(g).overall:
            checked["pipeline_structure"] += 1
            b = block_decomposition(g)
            if len(b.cut_vertices) > 1 or len(b.bridges) > 2 or len(b.blocks) > 2:
                counts = {"cut_vertices": list(b.cut_vertices), "bridges": len(b.bridges), "blocks": len(b.blocks)}
                violations["pipeline_structure"].append({**evidence, **counts})

        if palfy_condition(g).passed and len(connected_components(g)) == 2:
            checked["two_components_complete"] += 1
            if not complete_components(g):
                violations["two_components_complete"].append(evidence)
    return SweepReport(n, classes, checked, violations, strict)


__all__ = [
    "CatalogEntry",
    "EnumerationResult",
    "FILTERS",
    "SweepReport",
    "collect_certificates",
    "entry_flags",
    "enumerate_graphs",
    "iter_classes",
    "parse_filters",
    "sweep_validate",
]
