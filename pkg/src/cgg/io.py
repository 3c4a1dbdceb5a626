"""JSON graph documents.

A document looks like::

    {"edges": [[-11, 11], ...], "meta": {"construction": "Gnk", "k": 3, "q": 6},
     "n": 12, "parity": "odd", "schemaVersion": "1"}

Keys are sorted, each edge is ``[smaller, larger]`` and the edge list is sorted,
so equal graphs serialise to identical text.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .core import Cgg, Edge, Labelling
from .errors import CggError, ParseError, UnsupportedVersionError

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class GraphDocument:
    graph: Cgg
    meta: dict[str, Any] = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION

    def to_json(self) -> dict[str, Any]:
        doc = {
            "schemaVersion": self.schema_version,
            "n": self.graph.n,
            "parity": self.graph.labelling.parity,
            "edges": [e.as_list() for e in self.graph.sorted_edges()],
        }
        if self.meta:
            doc["meta"] = dict(self.meta)
        return doc


def serialize(g: Cgg, meta: dict[str, Any] | None = None) -> str:
    doc = GraphDocument(g, dict(meta or {}))
    return json.dumps(doc.to_json(), sort_keys=True, separators=(", ", ": ")) + "\n"


def _int(value, where):
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"expected an integer, got {value!r}", field=where)
    return value


def parse_document(text: str) -> GraphDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(raw, dict):
        raise ParseError("top level must be an object", field="$")
    version = raw.get("schemaVersion")
    if version is None:
        raise ParseError("missing schema version", field="schemaVersion")
    if version != SCHEMA_VERSION:
        raise UnsupportedVersionError(f"unsupported schema version {version!r}", field="schemaVersion")
    unknown = set(raw) - {"schemaVersion", "n", "parity", "edges", "meta"}
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}", field="$")
    n = _int(raw.get("n"), "n")
    parity = raw.get("parity", "odd")
    try:
        lab = Labelling(n, parity)
    except CggError as exc:
        raise ParseError(str(exc), field="parity" if parity not in ("odd", "even") else "n") from None
    edges_raw = raw.get("edges", [])
    if not isinstance(edges_raw, list):
        raise ParseError("edges must be a list", field="edges")
    edges = set()
    for i, item in enumerate(edges_raw):
        where = f"edges[{i}]"
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError("edge must be a two-element list", field=where)
        a, b = (_int(v, where) for v in item)
        try:
            e = Edge(lab.check(a), lab.check(b))
        except CggError as exc:
            raise ParseError(str(exc), field=where) from None
        if e in edges:
            raise ParseError(f"duplicate edge {e.as_list()}", field=where)
        edges.add(e)
    meta = raw.get("meta", {})
    if not isinstance(meta, dict):
        raise ParseError("meta must be an object", field="meta")
    return GraphDocument(Cgg(lab, frozenset(edges)), meta, version)


def parse(text: str) -> Cgg:
    return parse_document(text).graph
