"""Acceptance criteria, one test each.

Every test prints a single ``[PASS]``/``[FAIL]`` line straight to the
terminal and then asserts.  The n = 8 sweep is marked slow; run it with
``pytest -m slow``.
"""

import io
import json
import os
import time
from contextlib import redirect_stdout

import pytest

from cdgraph import LabeledGraph, fixtures
from cdgraph.algorithms import is_connected, is_k_regular
from cdgraph.canon import are_isomorphic, canonical_form
from cdgraph.cli import main
from cdgraph.constructors import direct_product, figure5_pair, lower_bound
from cdgraph.enumeration import enumerate_graphs, sweep_validate

@pytest.fixture
def report(capsys):
    def emit(number, title, ok, elapsed, limit):
        within = elapsed < limit
        status = "PASS" if ok and within else "FAIL"
        line = f"[{status}] criterion {number}: {title} ({elapsed:.2f}s, limit {limit:g}s)"
        with capsys.disabled():
            print("\n" + line)
        return ok and within

    return emit


def cli_json(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main([*argv, "--json"])
    return code, buf.getvalue()


def graph_of(doc):
    return LabeledGraph.from_edges(doc["vertices"], doc["edges"])


def matching_complement(n):
    labels = list(range(1000, 1000 + n))
    edges = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n) if j != i ^ 1]
    return LabeledGraph.from_edges(labels, edges, check_primes=False)


# -- 1 -------------------------------------------------------------------


def figure_outputs():
    return {name: cli_json("analyze", name) for name in ("figure1", "figure2", "figure3a", "figure3c", "figure4")}


def check_figures(outputs):
    docs = {k: (code, json.loads(text)) for k, (code, text) in outputs.items()}
    failures = []

    def expect(label, cond):
        if not cond:
            failures.append(label)

    code, d = docs["figure1"]
    expect("figure1 exit 1", code == 1)
    expect("figure1 not_p4 fails", any(c["name"] == "not_p4" and not c["pass"] for c in d["pipeline"]["conditions"]))

    code, d = docs["figure2"]
    expect("figure2 passes", code == 0)
    expect("figure2 diameter 2", d["diameter"] == 2)
    expect("figure2 two blocks", len(d["blocks"]["blocks"]) == 2)
    expect("figure2 one cut vertex", d["blocks"]["cut_vertices"] == [11])
    expect("figure2 not eulerian", d["eulerian"]["eulerian"] is False)

    code, d = docs["figure3a"]
    expect("figure3a 4-regular on 6", d["n"] == 6 and d["degree_sequence"] == [4] * 6)

    code, d = docs["figure3c"]
    expect("figure3c 6-regular on 8", d["n"] == 8 and d["degree_sequence"] == [6] * 8)
    expect("figure3c eulerian via regular route", d["eulerian"]["eulerian"] and d["eulerian"]["route"] == "regular-even")

    code, d = docs["figure4"]
    expect("figure4 non-regular", not d["regular"])
    expect("figure4 block", len(d["blocks"]["blocks"]) == 1 and not d["blocks"]["cut_vertices"])
    expect("figure4 diameter 2", d["diameter"] == 2)
    expect("figure4 eulerian", d["eulerian"]["eulerian"] is True)
    return failures


def test_criterion_1_figure_fidelity(report):
    t = time.perf_counter()
    failures = check_figures(figure_outputs())
    assert report(1, "figure fidelity", not failures, time.perf_counter() - t, 1.0), failures


# -- 2 -------------------------------------------------------------------


def regular_outputs():
    return {n: cli_json("construct", "regular", "--n", str(n)) for n in range(4, 21, 2)}


def test_criterion_2_regular_family(report):
    t = time.perf_counter()
    failures = []
    for n, (code, text) in regular_outputs().items():
        g = graph_of(json.loads(text)["graph"])
        ok = (
            code == 0
            and g.n == n
            and is_connected(g)
            and is_k_regular(g, n - 2)
            and g.edge_count < n * (n - 1) // 2
            and are_isomorphic(g, matching_complement(n), max_n=None)
        )
        if n == 6:
            ok = ok and are_isomorphic(g, fixtures.load("figure3a"))
        if n == 8:
            ok = ok and are_isomorphic(g, fixtures.load("figure3c"))
        if not ok:
            failures.append(n)
    assert report(2, "(n-2)-regular family n=4..20", not failures, time.perf_counter() - t, 1.0), failures


# -- 3 -------------------------------------------------------------------

EXACT_SIZES = {6: 1, 8: 2, 10: 3, 12: 5}


def bound_outputs():
    return {n: cli_json("verify-bound", "--n", str(n)) for n in range(6, 25, 2)}


def test_criterion_3_catalog_counts(report):
    t = time.perf_counter()
    failures = []
    for n, (code, text) in bound_outputs().items():
        doc = json.loads(text)
        ok = code == 0 and doc["pass"] and doc["count"] >= lower_bound(n)
        if n in EXACT_SIZES:
            ok = ok and doc["count"] == EXACT_SIZES[n]
        forms = set()
        for m in doc["members"]:
            p = m["properties"]
            ok = ok and m["verified"] and p["non_regular"] and p["block"] and p["diameter_two"] and p["eulerian"]
            forms.add(m["canonical"])
        ok = ok and len(forms) == doc["count"]
        if not ok:
            failures.append(n)
    assert report(3, "catalog sizes n=6..24", not failures, time.perf_counter() - t, 5.0), failures


# -- 4 -------------------------------------------------------------------


def product_forms():
    g1, g2 = figure5_pair()
    a = direct_product(g1.graph, g2.graph)
    b = direct_product(fixtures.load("figure3a"), fixtures.load("figure3b"))
    return canonical_form(a), canonical_form(b)


def test_criterion_4_product_identities(report):
    t = time.perf_counter()
    a, b = product_forms()
    ok = a == canonical_form(fixtures.load("figure4")) and b == canonical_form(fixtures.load("figure3c"))
    assert report(4, "direct product identities", ok, time.perf_counter() - t, 1.0)


# -- 5 and 6 -------------------------------------------------------------

CLASS_COUNTS = [1, 2, 4, 11, 34, 156, 1044]


@pytest.fixture(scope="module")
def sweeps():
    t = time.perf_counter()
    reports = [sweep_validate(n) for n in range(1, 8)]
    return reports, time.perf_counter() - t


def test_criterion_5_oracle_sweeps(report, sweeps):
    reports, elapsed = sweeps
    bad = {r.n: {k: len(v) for k, v in r.violations.items() if v} for r in reports if not r.ok}
    # the sweep must actually exercise each check
    exercised = all(sum(r.checked[k] for r in reports) > 0 for k in reports[0].checked)
    assert report(5, "oracle sweeps n<=7, zero violations", not bad and exercised, elapsed, 60.0), bad


def test_criterion_6_class_counts(report, sweeps):
    reports, elapsed = sweeps
    counts = [r.classes for r in reports]
    assert report(6, "class counts n=1..7", counts == CLASS_COUNTS, elapsed, 60.0), counts


@pytest.mark.slow
def test_criterion_5_oracle_sweep_n8(report):
    t = time.perf_counter()
    r = sweep_validate(8, allow_large=True, workers=os.cpu_count() or 1)
    ok = r.ok and r.classes == 12346
    assert report("5 (n=8)", "opt-in oracle sweep n=8", ok, time.perf_counter() - t, 1800.0)


# -- 7 -------------------------------------------------------------------


def test_criterion_7_determinism(report):
    t = time.perf_counter()
    same = (
        figure_outputs() == figure_outputs()
        and regular_outputs() == regular_outputs()
        and bound_outputs() == bound_outputs()
        and product_forms() == product_forms()
        and all(enumerate_graphs(n).jsonl() == enumerate_graphs(n).jsonl() for n in range(1, 7))
    )
    serial = enumerate_graphs(7, workers=1)
    parallel = enumerate_graphs(7, workers=2)
    same = same and serial.jsonl() == parallel.jsonl() and serial.summary() == parallel.summary()
    assert report(7, "byte-identical reruns and parallel merge", same, time.perf_counter() - t, 120.0)
