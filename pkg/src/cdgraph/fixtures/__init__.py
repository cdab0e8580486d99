"""Graph fixtures for the figures and worked examples, addressable by name."""

from __future__ import annotations

import json
from importlib import resources

from ..graph import LabeledGraph, parse_graph


def names() -> list[str]:
    return sorted(
        p.name[:-5] for p in resources.files(__name__).iterdir() if p.name.endswith(".json")
    )


def text(name: str) -> str:
    path = resources.files(__name__) / f"{name}.json"
    if not path.is_file():
        raise KeyError(f"no fixture named {name!r}; available: {', '.join(names())}")
    return path.read_text()


def load(name: str) -> LabeledGraph:
    return parse_graph(text(name))


def metadata(name: str) -> dict:
    return json.loads(text(name)).get("metadata", {})
