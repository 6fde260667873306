"""Text formats for graphs, colorings and search frontiers; DOT export.

Graph document::

    xinterval-graph 1
    x_count <int>
    y_count <int>
    multi <0|1>
    edge <x> <y>        (one line per edge, in edge order)

Coloring document::

    xinterval-coloring 1
    max_color <int>
    colors <c1> <c2> ...

Blank lines and ``#`` comments are ignored when parsing. ``emit_*`` always
writes the exact layout above, so emit(parse(text)) reproduces any
document already in that layout.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import ParseError, XIntervalError
from .graph import BipartiteGraph, EdgeColoring

GRAPH_MAGIC = "xinterval-graph"
COLORING_MAGIC = "xinterval-coloring"
FRONTIER_MAGIC = "xinterval-frontier"
FORMAT_VERSION = 1


class _Reader:
    """Non-blank, comment-stripped lines as (line number, [(token, column)])."""

    def __init__(self, text: str):
        self.rows = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0]
            tokens = [(m.group(), m.start() + 1)
                      for m in re.finditer(r"\S+", line)]
            if tokens:
                self.rows.append((number, tokens))
        self.pos = 0
        self.last = len(text.splitlines()) or 1

    def next(self, what: str):
        if self.pos == len(self.rows):
            raise ParseError(f"missing {what}", self.last)
        row = self.rows[self.pos]
        self.pos += 1
        return row

    def rest(self):
        while self.pos < len(self.rows):
            yield self.next("line")


def _int(token, number: int, minimum: int = 0) -> int:
    text, column = token
    if not re.fullmatch(r"[+-]?[0-9]+", text):
        raise ParseError(f"expected a base-10 integer, got {text!r}",
                         number, column)
    value = int(text, 10)
    if value < minimum:
        raise ParseError(f"value {value} below {minimum}", number, column)
    return value


def _header(reader: _Reader, magic: str) -> None:
    number, tokens = reader.next("header")
    if [t for t, _ in tokens] != [magic, str(FORMAT_VERSION)]:
        raise ParseError(f"expected header '{magic} {FORMAT_VERSION}'", number)


def _field(reader: _Reader, name: str) -> int:
    number, tokens = reader.next(f"field {name!r}")
    if len(tokens) != 2 or tokens[0][0] != name:
        raise ParseError(f"expected '{name} <int>'", number)
    return _int(tokens[1], number)


def parse_graph(text: str) -> BipartiteGraph:
    reader = _Reader(text)
    _header(reader, GRAPH_MAGIC)
    x_count = _field(reader, "x_count")
    y_count = _field(reader, "y_count")
    multi = _field(reader, "multi")
    if multi not in (0, 1):
        raise ParseError("multi must be 0 or 1", reader.rows[3][0])
    edges = []
    seen = set()
    for number, tokens in reader.rest():
        if len(tokens) != 3 or tokens[0][0] != "edge":
            raise ParseError("expected 'edge <x> <y>'", number)
        x = _int(tokens[1], number)
        y = _int(tokens[2], number)
        if x >= x_count:
            raise ParseError(f"x index {x} >= x_count {x_count}", number,
                             tokens[1][1])
        if y >= y_count:
            raise ParseError(f"y index {y} >= y_count {y_count}", number,
                             tokens[2][1])
        if not multi and (x, y) in seen:
            raise ParseError(f"duplicate edge ({x}, {y}) with multi 0", number)
        seen.add((x, y))
        edges.append((x, y))
    return BipartiteGraph(x_count, y_count, tuple(edges), bool(multi))


def emit_graph(g: BipartiteGraph) -> str:
    out = [f"{GRAPH_MAGIC} {FORMAT_VERSION}", f"x_count {g.x_count}",
           f"y_count {g.y_count}", f"multi {int(g.allow_multi)}"]
    out += [f"edge {x} {y}" for x, y in g.edges]
    return "\n".join(out) + "\n"


def parse_coloring(text: str) -> EdgeColoring:
    reader = _Reader(text)
    _header(reader, COLORING_MAGIC)
    max_color = _field(reader, "max_color")
    number, tokens = reader.next("'colors' line")
    if tokens[0][0] != "colors":
        raise ParseError("expected 'colors <c1> <c2> ...'", number)
    colors = tuple(_int(t, number, minimum=1) for t in tokens[1:])
    for extra, _ in reader.rest():
        raise ParseError("unexpected content after colors", extra)
    if max(colors, default=0) != max_color:
        raise ParseError(f"max_color {max_color} does not match colors", number)
    return EdgeColoring(colors)


def emit_coloring(coloring: EdgeColoring) -> str:
    body = " ".join(str(c) for c in coloring.colors)
    return (f"{COLORING_MAGIC} {FORMAT_VERSION}\nmax_color {coloring.max_color}\n"
            f"colors{' ' + body if body else ''}\n")


DOT_COLORS = ("red", "blue", "forestgreen", "orange", "purple", "brown",
              "magenta", "cyan", "gold", "gray40", "navy", "olivedrab")


def emit_dot(g: BipartiteGraph, coloring: EdgeColoring | None = None) -> str:
    """Graphviz document with X on the left rank and Y on the right.

    With a coloring, each edge is labeled with its color and drawn in a
    pen color keyed by it. Parallel edges are emitted individually.
    """
    out = ["graph G {", "  rankdir=LR;", "  node [shape=circle];"]
    out.append("  { rank=same; " + " ".join(f"x{x};" for x in range(g.x_count)) + " }")
    out.append("  { rank=same; " + " ".join(f"y{y};" for y in range(g.y_count)) + " }")
    for i, (x, y) in enumerate(g.edges):
        if coloring is None:
            out.append(f"  x{x} -- y{y};")
        else:
            c = coloring.colors[i]
            pen = DOT_COLORS[(c - 1) % len(DOT_COLORS)]
            out.append(f'  x{x} -- y{y} [label="{c}", color="{pen}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def write_frontier(spec, position: int, report) -> str:
    data = {
        "generator": spec.as_dict(),
        "position": position,
        "graphs_examined": report.graphs_examined,
        "budget_spent": report.budget_spent,
        "max_ratio": None if report.max_ratio is None else str(report.max_ratio),
        "ratios": [str(r) for r in report.ratios],
        "witness": None if report.witness is None else emit_graph(report.witness),
        "witness_colors": (None if report.witness_coloring is None
                           else list(report.witness_coloring.colors)),
        "witness_chi": report.witness_chi,
    }
    return f"{FRONTIER_MAGIC} {FORMAT_VERSION}\n" + json.dumps(data, indent=1) + "\n"


def read_frontier(text: str):
    """Inverse of :func:`write_frontier`: (spec, position, report)."""
    from .generators import GeneratorSpec
    from .oracle import SearchReport

    header, _, body = text.partition("\n")
    if header.strip() != f"{FRONTIER_MAGIC} {FORMAT_VERSION}":
        raise ParseError("not a frontier file (bad magic header)", 1)
    try:
        data = json.loads(body)
        report = SearchReport(
            graphs_examined=data["graphs_examined"],
            budget_spent=data["budget_spent"],
            max_ratio=(None if data["max_ratio"] is None
                       else Fraction(data["max_ratio"])),
            ratios=[Fraction(r) for r in data["ratios"]],
            witness=(None if data["witness"] is None
                     else parse_graph(data["witness"])),
            witness_coloring=(None if data["witness_colors"] is None
                              else EdgeColoring(tuple(data["witness_colors"]))),
            witness_chi=data["witness_chi"],
        )
        spec = GeneratorSpec.from_dict(data["generator"])
        return spec, int(data["position"]), report
    except (KeyError, ValueError, TypeError, XIntervalError) as exc:
        raise ParseError(f"malformed frontier body: {exc}", 2) from None
