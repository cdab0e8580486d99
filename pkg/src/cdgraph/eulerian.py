"""Eulerian classification of candidate character degree graphs.

Two classifiers are provided.  :func:`classify_sufficient` tests three
sufficient conditions (complete of odd order, non-complete regular of even
order, non-block of diameter at most 2 with odd-order blocks).
:func:`classify_diameter_three` decides the diameter-3 case from the
distance partition.  :func:`crosscheck` compares whichever applies with the
plain even-degree test.

The third condition of the diameter-3 test, "the middle layers induce an
Eulerian subgraph", has two readings selected by ``mode``:

``bipartite``
    every vertex of ``rho2 | rho3`` has an even number of neighbours in the
    opposite middle layer;
``strict``
    the subgraph induced by ``rho2 | rho3`` is connected with all degrees
    even.

Only the bipartite reading agrees with the direct test on every graph with
a valid partition; strict mode is kept so disagreements can be inspected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Literal, Optional, Union

from .algorithms import (
    EulerResult,
    block_decomposition,
    diameter,
    is_complete,
    is_connected,
    is_eulerian_direct,
    is_k_regular,
    is_regular,
)
from .conditions import (
    CITE_BLOCK_PARTITION,
    LewisPartition,
    block_by_partition,
    lewis_partition,
)
from .errors import NotDiameterThree, StructureViolation
from .graph import LabeledGraph, induced_subgraph

Mode = Literal["bipartite", "strict"]
MODE_NAMES = {"bipartite": "bipartite-parity", "strict": "induced-subgraph-strict"}

ROUTE_COMPLETE_ODD = "complete-odd"
ROUTE_REGULAR_EVEN = "regular-even"
ROUTE_ODD_BLOCKS = "odd-blocks"
ROUTE_DIAMETER_THREE = "diameter-three"
ROUTE_DIRECT = "direct-only"

CITE_SUFFICIENT = "eulerian-sufficient-conditions"
CITE_REGULAR = "non-complete-regular-is-n-minus-2-regular"
CITE_COMPLETE_BLOCKS = "diameter-two-blocks-complete"
CITE_DIAMETER_THREE = "eulerian-diameter-three-characterization"
CITE_EULER = "even-degree-characterization"


@dataclass(frozen=True)
class Reason:
    clause: str
    citation: str
    passed: bool
    witness: Any = None

    def to_dict(self) -> dict[str, Any]:
        return {"clause": self.clause, "citation": self.citation, "pass": self.passed, "witness": self.witness}


@dataclass(frozen=True)
class EulerianVerdict:
    eulerian: bool
    route: str
    reasons: tuple[Reason, ...] = ()
    mode: str = MODE_NAMES["bipartite"]
    partition: Optional[LewisPartition] = field(default=None, compare=False)

    def to_dict(self) -> dict[str, Any]:
        out = {
            "eulerian": self.eulerian,
            "route": self.route,
            "mode": self.mode,
            "reasons": [r.to_dict() for r in self.reasons],
        }
        return out


@dataclass(frozen=True)
class NotApplicable:
    """No sufficient condition fired; ``reasons`` says why each one failed."""

    reasons: tuple[Reason, ...] = ()

    def __bool__(self) -> bool:
        return False

    def to_dict(self) -> dict[str, Any]:
        return {"applicable": False, "reasons": [r.to_dict() for r in self.reasons]}


def _complete_odd(g: LabeledGraph) -> Reason:
    ok = g.n >= 3 and g.n % 2 == 1 and is_complete(g)
    return Reason("complete-odd-order", CITE_SUFFICIENT, ok, {"n": g.n, "complete": is_complete(g)})


def _regular_even(g: LabeledGraph) -> list[Reason]:
    regular = is_regular(g) and g.n > 0
    hyp = regular and not is_complete(g) and g.n >= 4 and g.n % 2 == 0
    first = Reason(
        "non-complete-regular-even-order",
        CITE_SUFFICIENT,
        hyp,
        {"n": g.n, "regular": regular, "complete": is_complete(g)},
    )
    if not hyp:
        return [first]
    # Regular non-complete character degree graphs are (n-2)-regular; a
    # graph that is not lies outside the class and the clause must not fire.
    forced = is_k_regular(g, g.n - 2)
    degree = g.rows[0].bit_count()
    return [first, Reason("forced-n-minus-2-regular", CITE_REGULAR, forced, {"degree": degree})]


def _odd_blocks(g: LabeledGraph) -> list[Reason]:
    blocks = block_decomposition(g)
    d = diameter(g)
    not_block = len(blocks.blocks) > 1
    sizes = [len(b) for b in blocks.blocks]
    odd = all(s % 2 == 1 for s in sizes)
    hyp = g.n >= 3 and not_block and d <= 2 and odd
    first = Reason(
        "non-block-diameter-two-odd-blocks",
        CITE_SUFFICIENT,
        hyp,
        {"n": g.n, "blocks": [list(b) for b in blocks.blocks], "diameter": d if d != float("inf") else None},
    )
    if not hyp:
        return [first]
    incomplete = [list(b) for b in blocks.blocks if not is_complete(induced_subgraph(g, b))]
    return [first, Reason("blocks-complete", CITE_COMPLETE_BLOCKS, not incomplete, incomplete or None)]


def classify_sufficient(g: LabeledGraph) -> Union[EulerianVerdict, NotApplicable]:
    """First sufficient condition that holds, in the order listed above.

    The clauses rely on structural facts true of every character degree
    graph (forced (n-2)-regularity, complete blocks); these are checked and
    a clause whose fact fails does not fire.
    """
    reasons: list[Reason] = []
    r = _complete_odd(g)
    reasons.append(r)
    if r.passed:
        return EulerianVerdict(True, ROUTE_COMPLETE_ODD, (r,))
    rs = _regular_even(g)
    reasons.extend(rs)
    if all(x.passed for x in rs):
        return EulerianVerdict(True, ROUTE_REGULAR_EVEN, tuple(rs))
    rs = _odd_blocks(g)
    reasons.extend(rs)
    if all(x.passed for x in rs):
        return EulerianVerdict(True, ROUTE_ODD_BLOCKS, tuple(rs))
    return NotApplicable(tuple(reasons))


def _cross_degrees(g: LabeledGraph, p: LewisPartition) -> dict[int, int]:
    s2, s3 = set(p.rho2), set(p.rho3)
    out = {}
    for v in p.rho2:
        out[v] = sum(1 for w in g.neighbors(v) if w in s3)
    for v in p.rho3:
        out[v] = sum(1 for w in g.neighbors(v) if w in s2)
    return dict(sorted(out.items()))


def middle_condition(g: LabeledGraph, p: LewisPartition, mode: Mode = "bipartite") -> Reason:
    if mode == "bipartite":
        cross = _cross_degrees(g, p)
        odd = [v for v, k in cross.items() if k % 2]
        return Reason(
            "middle-layers-even-cross-degree",
            CITE_DIAMETER_THREE,
            not odd,
            {"cross_degrees": {str(k): v for k, v in cross.items()}, "odd": odd},
        )
    if mode == "strict":
        sub = induced_subgraph(g, p.rho2 + p.rho3)
        res = is_eulerian_direct(sub)
        return Reason(
            "middle-layers-induce-eulerian",
            CITE_DIAMETER_THREE,
            res.eulerian,
            {"degrees": {str(k): v for k, v in sub.degrees().items()}, "detail": res.reason},
        )
    raise ValueError(f"unknown mode {mode!r}")


def classify_diameter_three(
    g: LabeledGraph, mode: Mode = "bipartite", partition: Optional[LewisPartition] = None
) -> EulerianVerdict:
    """Eulerian iff block, both sides of odd order, middle condition holds.

    Raises :class:`NotDiameterThree` or :class:`StructureViolation` when the
    graph has no valid partition.
    """
    p = partition or lewis_partition(g)
    block = block_by_partition(p)
    r1 = Reason("block", CITE_BLOCK_PARTITION, block, {"rho2": len(p.rho2), "rho3": len(p.rho3)})
    lo, hi = len(p.low), len(p.high)
    r2 = Reason("odd-sides", CITE_DIAMETER_THREE, lo % 2 == 1 and hi % 2 == 1, {"low": lo, "high": hi})
    r3 = middle_condition(g, p, mode)
    reasons = (r1, r2, r3)
    return EulerianVerdict(all(r.passed for r in reasons), ROUTE_DIAMETER_THREE, reasons, MODE_NAMES[mode], p)


@dataclass(frozen=True)
class CrossCheck:
    direct: EulerResult
    verdict: EulerianVerdict
    agree: bool
    evidence: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "agree": self.agree,
            "direct": {"eulerian": self.direct.eulerian, "reason": self.direct.reason},
            "verdict": self.verdict.to_dict(),
            "evidence": self.evidence,
        }


def classify(g: LabeledGraph, mode: Mode = "bipartite") -> EulerianVerdict:
    """Verdict from the applicable classifier, else the direct test."""
    direct = is_eulerian_direct(g)
    fallback: tuple[Reason, ...] = ()
    if g.n > 0 and is_connected(g) and diameter(g) == 3:
        try:
            return classify_diameter_three(g, mode)
        except StructureViolation as exc:
            fallback = (Reason("distance-partition", CITE_DIAMETER_THREE, False, {"violated": exc.clause}),)
    else:
        v = classify_sufficient(g)
        if isinstance(v, EulerianVerdict):
            return EulerianVerdict(v.eulerian, v.route, v.reasons, MODE_NAMES[mode])
        fallback = v.reasons
    reasons = fallback + (Reason("even-degrees-connected", CITE_EULER, direct.eulerian, direct.reason),)
    return EulerianVerdict(direct.eulerian, ROUTE_DIRECT, reasons, MODE_NAMES[mode])


def crosscheck(g: LabeledGraph, mode: Mode = "bipartite") -> CrossCheck:
    direct = is_eulerian_direct(g)
    verdict = classify(g, mode)
    agree = verdict.eulerian == direct.eulerian
    evidence: dict[str, Any] = {}
    if not agree:
        evidence = {
            "graph": g.to_dict(),
            "degrees": {str(k): v for k, v in g.degrees().items()},
            "partition": verdict.partition.to_dict() if verdict.partition else None,
        }
    return CrossCheck(direct, verdict, agree, evidence)


__all__ = [
    "CrossCheck",
    "EulerianVerdict",
    "NotApplicable",
    "NotDiameterThree",
    "Reason",
    "classify",
    "classify_diameter_three",
    "classify_sufficient",
    "crosscheck",
    "middle_condition",
]
