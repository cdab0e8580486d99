"""Command-line entry point.

Exit codes: 0 success or pass, 1 a verified negative (analysis fails the
necessary conditions, bound unmet, sweep violation), 2 usage or input error.
Human-readable text goes to stdout; ``--json`` prints machine JSON instead
and ``--out`` writes it to a file.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import hashlib
import json
import os
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from . import __version__, fixtures
from .algorithms import (
    INFINITE,
    block_decomposition,
    connected_components,
    degree_sequence,
    diameter,
    is_regular,
)
from .conditions import all_lewis_partitions, cut_vertex_by_partition, lewis_partition, necessary_pipeline
from .constructors import (
    Built,
    base_recipe,
    build_product,
    build_two_component,
    eulerian_catalog,
    lower_bound,
    operation_d,
    regular_family,
)
from .errors import CdgError, GraphInputError, InconsistentWitness, StructureViolation
from .eulerian import crosscheck
from .enumeration import enumerate_graphs, sweep_validate
from .graph import LabeledGraph, parse_graph

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _sha(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


class Run:
    """Collects inputs and outputs of one invocation for the manifest."""

    def __init__(self, argv: Sequence[str]):
        self.argv = list(argv)
        self.inputs: dict[str, str] = {}
        self.outputs: dict[str, str] = {}

    def read_graph(self, ref: str, check_primes: bool) -> LabeledGraph:
        path = Path(ref)
        if path.is_file():
            text = path.read_text()
        else:
            name = path.name[:-5] if path.name.endswith(".json") else path.name
            try:
                text = fixtures.text(name)
            except KeyError:
                raise GraphInputError(f"{ref}: no such file or fixture") from None
        self.inputs[ref] = _sha(text.encode())
        return parse_graph(text, check_primes=check_primes)

    def emit(self, args: argparse.Namespace, doc: Any, text: str, name: str = "result") -> None:
        payload = dumps(doc)
        self.outputs[name] = _sha(payload.encode())
        if getattr(args, "out", None):
            Path(args.out).write_text(payload)
        if getattr(args, "json", False):
            sys.stdout.write(payload)
        else:
            sys.stdout.write(text)

    def write_file(self, path: str, payload: str, name: str) -> None:
        Path(path).write_text(payload)
        self.outputs[name] = _sha(payload.encode())

    def manifest(self) -> dict[str, Any]:
        return {
            "command": self.argv,
            "inputs": dict(sorted(self.inputs.items())),
            "version": __version__,
            "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
            "outputs": dict(sorted(self.outputs.items())),
        }


# -- analyze -------------------------------------------------------------


def analysis(g: LabeledGraph, mode: str = "bipartite", all_partitions: bool = False) -> dict[str, Any]:
    report = necessary_pipeline(g)
    blocks = block_decomposition(g)
    d = diameter(g)
    check = crosscheck(g, mode)  # type: ignore[arg-type]
    doc: dict[str, Any] = {
        "graph": g.to_dict(),
        "n": g.n,
        "edge_count": g.edge_count,
        "components": connected_components(g),
        "diameter": None if d == INFINITE else int(d),
        "degree_sequence": degree_sequence(g),
        "regular": is_regular(g),
        "blocks": blocks.to_dict(),
        "pipeline": report.to_dict(),
        "eulerian": check.verdict.to_dict(),
        "eulerian_direct": check.direct.eulerian,
        "classifier_agrees": check.agree,
        "partition": None,
    }
    if d == 3:
        try:
            p = lewis_partition(g)
            doc["partition"] = p.to_dict()
            try:
                doc["partition"]["cut_vertex"] = cut_vertex_by_partition(p, g)
            except InconsistentWitness as exc:
                doc["partition"]["cut_vertex_error"] = str(exc)
        except StructureViolation as exc:
            doc["partition"] = {"error": "StructureViolation", "clause": exc.clause, "witness": exc.witness}
        if all_partitions:
            doc["partitions"] = [
                {"r": r, "s": s, **(p.to_dict() if not isinstance(p, StructureViolation) else {"error": p.clause})}
                for r, s, p in all_lewis_partitions(g)
            ]
    elif all_partitions:
        doc["partitions"] = []
    return doc


def analysis_text(doc: dict[str, Any]) -> str:
    lines = [
        f"vertices: {doc['graph']['vertices']}",
        f"edges: {doc['edge_count']}  components: {len(doc['components'])}  "
        f"diameter: {doc['diameter'] if doc['diameter'] is not None else 'infinite'}",
        f"degree sequence: {doc['degree_sequence']}{'  (regular)' if doc['regular'] else ''}",
        f"blocks: {len(doc['blocks']['blocks'])}  cut vertices: {doc['blocks']['cut_vertices']}  "
        f"bridges: {doc['blocks']['bridges']}",
        f"necessary conditions: {'PASS' if doc['pipeline']['overall'] else 'FAIL'}",
    ]
    for c in doc["pipeline"]["conditions"]:
        mark = "ok  " if c["pass"] else "FAIL"
        extra = "" if c["pass"] else f"  witness={json.dumps(c['witness'], sort_keys=True)}"
        lines.append(f"  [{mark}] {c['name']} ({c['citation']}){extra}")
    e = doc["eulerian"]
    lines.append(f"eulerian: {str(e['eulerian']).lower()}  route: {e['route']}  mode: {e['mode']}")
    p = doc.get("partition")
    if p and "error" not in p:
        lines.append(f"partition from r={p['r']}: rho1={p['rho1']} rho2={p['rho2']} rho3={p['rho3']} rho4={p['rho4']}")
    elif p:
        lines.append(f"partition: structure violation ({p['clause']})")
    return "\n".join(lines) + "\n"


def cmd_analyze(args: argparse.Namespace, run: Run) -> int:
    g = run.read_graph(args.file, not args.no_prime_check)
    doc = analysis(g, args.mode, args.all_partitions)
    run.emit(args, doc, analysis_text(doc))
    return EXIT_OK if doc["pipeline"]["overall"] else EXIT_NEGATIVE


# -- construct -----------------------------------------------------------


def _built_doc(b: Built) -> dict[str, Any]:
    return {"graph": b.graph.to_dict(), "recipe": b.recipe.to_dict()}


def _built_text(b: Built) -> str:
    g = b.graph
    return (
        f"constructed {b.recipe.kind}: {g.n} vertices, {g.edge_count} edges\n"
        f"vertices: {list(g.vertices)}\n"
        f"degree sequence: {degree_sequence(g)}\n"
    )


def _emit_built(args: argparse.Namespace, run: Run, b: Built) -> int:
    run.emit(args, _built_doc(b), _built_text(b))
    if args.dot:
        run.write_file(args.dot, b.graph.to_dot(), "dot")
    return EXIT_OK


def cmd_construct(args: argparse.Namespace, run: Run) -> int:
    kind = args.kind
    check = not args.no_prime_check
    if kind == "regular":
        return _emit_built(args, run, regular_family(args.n))
    if kind == "product":
        a = run.read_graph(args.a, check)
        b = run.read_graph(args.b, check)
        return _emit_built(args, run, build_product(Built(a, base_recipe(a, args.a)), Built(b, base_recipe(b, args.b))))
    if kind == "opd":
        g = run.read_graph(args.input, check)
        return _emit_built(args, run, operation_d(Built(g, base_recipe(g, args.input))))
    if kind == "two-component":
        qs = [int(x) for x in args.q.split(",") if x.strip()]
        return _emit_built(args, run, build_two_component(args.p, qs))
    if kind == "catalog":
        report = eulerian_catalog(args.n)
        doc = report.to_dict()
        lines = [f"n={report.n}: {report.count} members, lower bound {report.lower_bound}"]
        for c in report.checks:
            lines.append(f"  #{c['index']} {c['stream']:<20} degrees {_compact(c['degree_sequence'])}  verified")
        run.emit(args, doc, "\n".join(lines) + "\n")
        if args.dot:
            dot = "".join(m.graph.to_dot(f"member{i}") for i, m in enumerate(report.members))
            run.write_file(args.dot, dot, "dot")
        return EXIT_OK if report.meets_bound else EXIT_NEGATIVE
    raise AssertionError(kind)


def _compact(seq: list[int]) -> str:
    parts = []
    for d in sorted(set(seq), reverse=True):
        k = seq.count(d)
        parts.append(f"{d}^{k}" if k > 1 else str(d))
    return "[" + ",".join(parts) + "]"


# -- enumerate / verify-bound / sweep -------------------------------------


def cmd_enumerate(args: argparse.Namespace, run: Run) -> int:
    result = enumerate_graphs(
        args.n,
        args.filter,
        workers=args.workers,
        checkpoint=Path(args.checkpoint) if args.checkpoint else None,
        allow_large=args.allow_n8,
        progress=args.progress,
    )
    catalog = result.jsonl()
    summary = result.summary()
    run.outputs["catalog"] = _sha(catalog.encode())
    if args.out:
        run.write_file(args.out, catalog, "catalog")
    if args.summary:
        run.write_file(args.summary, dumps(summary), "summary")
    if args.json:
        sys.stdout.write(catalog)
    else:
        sys.stdout.write(
            f"n={result.n}: {result.labeled_graphs} labeled graphs, {result.total_classes} classes, "
            f"{len(result.entries)} match {','.join(result.filters) or '(no filter)'}\n"
        )
    return EXIT_OK


def cmd_verify_bound(args: argparse.Namespace, run: Run) -> int:
    report = eulerian_catalog(args.n)
    ok = report.meets_bound and report.all_verified
    doc = {
        "n": args.n,
        "count": report.count,
        "lower_bound": lower_bound(args.n),
        "pass": ok,
        "members": report.checks,
    }
    text = f"n={args.n}: {'pass' if ok else 'FAIL'}, {report.count} >= {report.lower_bound}\n" if ok else (
        f"n={args.n}: FAIL, {report.count} < {report.lower_bound}\n"
    )
    run.emit(args, doc, text)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_sweep(args: argparse.Namespace, run: Run) -> int:
    report = sweep_validate(args.n, workers=args.workers, allow_large=args.allow_n8)
    doc = report.to_dict()
    lines = [f"n={report.n}: {report.classes} classes, {'no violations' if report.ok else 'VIOLATIONS'}"]
    for k, v in report.checked.items():
        lines.append(f"  {k}: {v} checked, {len(report.violations[k])} violations")
    lines.append(f"  strict-mode disagreements (informational): {len(report.strict_disagreements)}")
    run.emit(args, doc, "\n".join(lines) + "\n")
    return EXIT_OK if report.ok else EXIT_NEGATIVE


# -- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print machine JSON instead of text")
    common.add_argument("--out", help="write machine JSON to this path")
    common.add_argument("--manifest", help="write a run manifest (inputs, version, output digests)")
    common.add_argument("--no-prime-check", action="store_true", help="accept any distinct positive labels")

    parser = argparse.ArgumentParser(prog="cdgraph", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"cdgraph {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="run every check on a graph file or fixture")
    p.add_argument("file", help="Graph JSON path or fixture name (e.g. figure2)")
    p.add_argument("--mode", choices=["bipartite", "strict"], default="bipartite")
    p.add_argument("--all-partitions", action="store_true", help="emit the partition for every diametral pair")
    p.set_defaults(func=cmd_analyze)

    c = sub.add_parser("construct", help="build graphs from the product constructions")
    csub = c.add_subparsers(dest="kind", required=True)
    dot = argparse.ArgumentParser(add_help=False)
    dot.add_argument("--dot", help="also write Graphviz DOT to this path")
    r = csub.add_parser("regular", parents=[common, dot], help="(n-2)-regular graph on n vertices")
    r.add_argument("--n", type=int, required=True)
    pr = csub.add_parser("product", parents=[common, dot], help="direct product of two graphs")
    pr.add_argument("a")
    pr.add_argument("b")
    o = csub.add_parser("opd", parents=[common, dot], help="apply Operation D to a graph")
    o.add_argument("--in", dest="input", required=True)
    t = csub.add_parser("two-component", parents=[common, dot], help="isolated odd prime beside a clique")
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--q", required=True, help="comma-separated clique primes")
    k = csub.add_parser("catalog", parents=[common, dot], help="non-regular Eulerian diameter-2 blocks")
    k.add_argument("--n", type=int, required=True)
    c.set_defaults(func=cmd_construct)

    e = sub.add_parser("enumerate", parents=[common], help="all graphs on n vertices up to isomorphism")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--filter", default=None, help="comma-separated predicates, all must hold")
    e.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    e.add_argument("--checkpoint", help="resume/save progress in this file")
    e.add_argument("--summary", help="write summary JSON to this path")
    e.add_argument("--allow-n8", action="store_true", help="opt in to the 2^28-graph n = 8 run")
    e.add_argument("--progress", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify-bound", parents=[common], help="check the catalog size against the lower bound")
    v.add_argument("--n", type=int, required=True)
    v.set_defaults(func=cmd_verify_bound)

    s = sub.add_parser("sweep", parents=[common], help="check the structural properties on every class")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    s.add_argument("--allow-n8", action="store_true")
    s.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    run = Run(["cdgraph", *argv])
    try:
        code = args.func(args, run)
    except (CdgError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.manifest:
        Path(args.manifest).write_text(dumps(run.manifest()))
    return code


if __name__ == "__main__":
    sys.exit(main())
