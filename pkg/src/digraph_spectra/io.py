"""Graph file formats: plain-text edge lists and a JSON equivalent.

Text format, one directive per line::

    # optional comment
    n 6
    2 1 1
    5 4 -7
    1 1 2          # tail == head is a self-loop

Weights are written with 17 significant digits so files round-trip
weight-exact.  Construction provenance, when present, is carried as a
structured ``# provenance {...}`` comment, which any plain parser of the
format skips.  The JSON form mirrors the same fields:
``{"n": ..., "edges": [[tail, head, w], ...], "provenance": {...}?}``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .graph import Digraph, Edge, build_digraph

_PROVENANCE_COMMENT = "# provenance "


class GraphFormatError(Exception):
    """Raised when a graph or cross-edge file cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


def parse_graph_text(text: str) -> Digraph:
    n = None
    edges: list[Edge] = []
    provenance = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith(_PROVENANCE_COMMENT):
            try:
                provenance = json.loads(line[len(_PROVENANCE_COMMENT):])
            except json.JSONDecodeError as exc:
                raise GraphFormatError(f"bad provenance comment: {exc}", lineno) from exc
            continue
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise GraphFormatError("duplicate 'n' header", lineno)
            if len(parts) != 2:
                raise GraphFormatError("expected 'n <count>'", lineno)
            try:
                n = int(parts[1])
            except ValueError as exc:
                raise GraphFormatError(f"bad node count {parts[1]!r}", lineno) from exc
            continue
        if n is None:
            raise GraphFormatError("edge line before 'n' header", lineno)
        if len(parts) != 3:
            raise GraphFormatError("expected '<tail> <head> <weight>'", lineno)
        try:
            tail, head, w = int(parts[0]), int(parts[1]), float(parts[2])
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line {line!r}", lineno) from exc
        edges.append((tail, head, w))
    if n is None:
        raise GraphFormatError("missing 'n <count>' header")
    try:
        return build_digraph(n, edges, provenance=provenance)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def parse_graph_json(text: str) -> Digraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}", exc.lineno) from exc
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise GraphFormatError("expected an object with 'n' and 'edges'")
    try:
        edges = [(int(t), int(h), float(w)) for t, h, w in obj["edges"]]
        return build_digraph(int(obj["n"]), edges, provenance=obj.get("provenance"))
    except (TypeError, ValueError) as exc:
        raise GraphFormatError(str(exc)) from exc


def parse_graph(text: str) -> Digraph:
    """Parse either format, sniffing JSON by a leading '{'."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_graph_json(text)
    return parse_graph_text(text)


def load_graph(path: str | Path) -> Digraph:
    return parse_graph(Path(path).read_text())


def graph_to_text(g: Digraph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{tail} {head} {w:.17g}" for tail, head, w in g.edges())
    if g.provenance is not None:
        lines.append(_PROVENANCE_COMMENT + json.dumps(g.provenance, sort_keys=True))
    return "\n".join(lines) + "\n"


def graph_to_json_dict(g: Digraph) -> dict:
    obj: dict = {"n": g.n, "edges": [[t, h, w] for t, h, w in g.edges()]}
    if g.provenance is not None:
        obj["provenance"] = g.provenance
    return obj


def write_graph(g: Digraph, path: str | Path) -> None:
    """Write a graph file; '.json' extension selects the JSON form."""
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(json.dumps(graph_to_json_dict(g), indent=2) + "\n")
    else:
        path.write_text(graph_to_text(g))


def parse_cross_edges(text: str) -> tuple[list[Edge], list[Edge]]:
    """Parse a cross-edge file with 'e12' and 'e21' sections.

    Section marker lines are the bare words ``e12`` / ``e21``; each
    following line is a ``<tail> <head> <weight>`` triple in the local
    labels of the source and target graphs.
    """
    sections: dict[str, list[Edge]] = {"e12": [], "e21": []}
    current: list[Edge] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line in sections:
            current = sections[line]
            continue
        if current is None:
            raise GraphFormatError("cross-edge line before an 'e12'/'e21' section", lineno)
        parts = line.split()
        if len(parts) != 3:
            raise GraphFormatError("expected '<tail> <head> <weight>'", lineno)
        try:
            current.append((int(parts[0]), int(parts[1]), float(parts[2])))
        except ValueError as exc:
            raise GraphFormatError(f"bad cross-edge line {line!r}", lineno) from exc
    return sections["e12"], sections["e21"]


def load_cross_edges(path: str | Path) -> tuple[list[Edge], list[Edge]]:
    return parse_cross_edges(Path(path).read_text())
