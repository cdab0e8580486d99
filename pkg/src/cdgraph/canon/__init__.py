"""Canonical forms and isomorphism testing.

The compiled kernel (``_canon_ext``) is used when it was built and the graph
has at most 11 vertices; otherwise the pure-Python kernel runs.  Both
return identical certificates.  Set ``CDGRAPH_PURE_PYTHON=1`` to force the
fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from ..errors import TooLarge
from ..graph import LabeledGraph, first_primes
from . import _canon_py

DEFAULT_MAX_N = 12

_ext: ModuleType | None
try:
    if os.environ.get("CDGRAPH_PURE_PYTHON"):
        raise ImportError("pure-Python kernel requested")
    from . import _canon_ext as _ext
except ImportError:
    _ext = None

BACKEND = "cython" if _ext is not None else "python"
EXT_MAX_N = _ext.MAX_VERTICES if _ext is not None else 0


def kernel(name: str | None = None) -> ModuleType:
    """Return a kernel module by name (``"cython"`` or ``"python"``)."""
    name = name or BACKEND
    if name == "python":
        return _canon_py
    if name == "cython":
        if _ext is None:
            raise ImportError("compiled kernel is not available")
        return _ext
    raise ValueError(f"unknown kernel {name!r}")


def certificate(n: int, rows) -> int:
    if _ext is not None and n <= EXT_MAX_N:
        return _ext.certificate(n, list(rows))
    return _canon_py.certificate(n, rows)


def canon_range(n: int, lo: int, hi: int, backend: str | None = None) -> set[int]:
    k = kernel(backend)
    if k is _ext and n > EXT_MAX_N:
        k = _canon_py
    return k.canon_range(n, lo, hi)


def cert_bytes(n: int, cert: int) -> bytes:
    width = (_canon_py.slot_count(n) + 7) // 8
    return bytes([n]) + cert.to_bytes(width, "big")


def cert_from_bytes(form: bytes) -> tuple[int, int]:
    return form[0], int.from_bytes(form[1:], "big")


def canonical_form(g: LabeledGraph, max_n: int | None = DEFAULT_MAX_N) -> bytes:
    """Byte string equal for two graphs exactly when they are isomorphic.

    Labels are ignored.  ``max_n=None`` lifts the size guard.
    """
    if max_n is not None and g.n > max_n:
        raise TooLarge(f"canonical_form bound is {max_n} vertices, graph has {g.n}")
    return cert_bytes(g.n, certificate(g.n, g.rows))


def are_isomorphic(a: LabeledGraph, b: LabeledGraph, max_n: int | None = DEFAULT_MAX_N) -> bool:
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    if sorted(a.degrees().values()) != sorted(b.degrees().values()):
        return False
    return canonical_form(a, max_n) == canonical_form(b, max_n)


def canonical_labeling(g: LabeledGraph) -> list[int]:
    """Vertex labels of ``g`` in canonical order."""
    _, order, _ = _canon_py.canonical_search(g.rows)
    return [g.vertices[i] for i in order]


def graph_from_form(form: bytes, labels: list[int] | None = None) -> LabeledGraph:
    """Rebuild the canonical representative, labeled by the first n primes."""
    n, cert = cert_from_bytes(form)
    labels = labels or first_primes(n)
    return LabeledGraph.from_rows(labels, _canon_py.cert_to_rows(n, cert))


__all__ = [
    "BACKEND",
    "DEFAULT_MAX_N",
    "are_isomorphic",
    "canon_range",
    "canonical_form",
    "canonical_labeling",
    "cert_bytes",
    "cert_from_bytes",
    "certificate",
    "graph_from_form",
    "kernel",
]
