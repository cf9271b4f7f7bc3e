"""Graph and coloring documents, plus a plain edge-list reader.

Graph documents are JSON with normalized, sorted edges written one per line,
so generated files diff cleanly and re-serialize to identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from condcolor.families import FamilySpec
from condcolor.graph import Graph, InputError
from condcolor.kernel import Coloring

GRAPH_FORMAT = "condcolor-graph"
COLORING_FORMAT = "condcolor-coloring"
VERSION = 1


@dataclass(frozen=True)
class ColoringDocument:
    coloring: Coloring
    r: int | None = None


def dumps_graph(g: Graph) -> str:
    head = {"format": GRAPH_FORMAT, "version": VERSION, "n": g.n}
    if g.family is not None:
        head["family"] = str(g.family)
    lines = ["{"]
    for key, value in head.items():
        lines.append(f"  {json.dumps(key)}: {json.dumps(value)},")
    if g.labels is not None:
        lines.append(f'  "labels": {json.dumps(list(g.labels))},')
    edges = g.edges()
    if edges:
        lines.append('  "edges": [')
        body = [f"    [{u}, {v}]" for u, v in edges]
        lines.append(",\n".join(body))
        lines.append("  ]")
    else:
        lines.append('  "edges": []')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _load_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def loads_graph(text: str) -> Graph:
    """Parse a graph document, or an edge list if the text is not JSON."""
    if not text.lstrip().startswith("{"):
        return parse_edge_list(text)
    doc = _load_json(text, "graph document")
    if doc.get("format") != GRAPH_FORMAT:
        raise InputError(f"not a graph document (format={doc.get('format')!r})")
    if doc.get("version") != VERSION:
        raise InputError(f"unsupported graph document version {doc.get('version')!r}")
    try:
        n = int(doc["n"])
        edges = [(int(u), int(v)) for u, v in doc["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed graph document: {exc}") from None
    meta = {}
    if "family" in doc:
        meta["family"] = FamilySpec.parse(doc["family"])
    return Graph.from_edges(n, edges, doc.get("labels"), **meta)


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """``u v`` per line, 0-based ids, ``#`` starts a comment.

    ``n`` defaults to one more than the largest id. Repeated edges and
    self-loops are dropped with a warning.
    """
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"edge list line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"edge list line {lineno}: non-integer vertex in {raw!r}") from None
        if u < 0 or v < 0:
            raise InputError(f"edge list line {lineno}: negative vertex id")
        edges.append((u, v))
    top = max((max(e) for e in edges), default=-1) + 1
    if n is None:
        n = top
    elif n < top:
        raise InputError(f"edge list mentions vertex {top - 1} but n={n}")
    return Graph.from_edges(n, edges, dedup=True)


def dumps_coloring(c: Coloring, r: int | None = None) -> str:
    doc = {"format": COLORING_FORMAT, "version": VERSION, "k": c.k}
    if r is not None:
        doc["r"] = r
    doc["colors"] = list(c.colors)
    return json.dumps(doc) + "\n"


def loads_coloring(text: str) -> ColoringDocument:
    """Parse a coloring document; a bare JSON array of colors is accepted too."""
    doc = _load_json(text, "coloring document")
    if isinstance(doc, list):
        return ColoringDocument(Coloring.of(doc))
    if doc.get("format") != COLORING_FORMAT:
        raise InputError(f"not a coloring document (format={doc.get('format')!r})")
    try:
        colors = [int(x) for x in doc["colors"]]
        k = int(doc["k"]) if "k" in doc else None
        r = int(doc["r"]) if doc.get("r") is not None else None
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed coloring document: {exc}") from None
    return ColoringDocument(Coloring.of(colors, k), r)


def read_graph(path: str | Path) -> Graph:
    return loads_graph(_read(path))


def read_coloring(path: str | Path) -> ColoringDocument:
    return loads_coloring(_read(path))


def _read(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
