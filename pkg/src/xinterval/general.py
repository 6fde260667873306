"""Biregular decomposition and the polynomial X-interval coloring pipelines.

The building block is :func:`biregular_decompose`: color the neighborhood
hypergraph greedily, bundle the hyperedge colors into blocks of ``a``
consecutive colors, and read each block back as a subgraph of maximum
degree ``a``. König-coloring each block inside its own color window gives
an X-interval coloring with at most ``a*b`` colors; stacking one such
window per X-degree class handles arbitrary bipartite graphs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import PreconditionViolated
from .graph import (BipartiteGraph, EdgeColoring, edge_induced_subgraph,
                    verify_coloring)
from .hypergraph import color_classes, from_neighborhoods, greedy_edge_color
from .konig import konig_edge_color


class Method(enum.Enum):
    # declaration order is the tie-break order used by ``auto``
    BIREGULAR = "biregular"
    GENERAL = "general"
    MULTIGRAPH = "multigraph"
    DELTA6_RESTRICTED = "delta6_restricted"
    DELTA6 = "delta6"
    PALETTE = "palette"


@dataclass(frozen=True)
class BoundCertificate:
    method: Method
    guaranteed_bound: int
    colors_used: int
    verified: bool

    def as_dict(self) -> dict:
        return {
            "method": self.method.value,
            "guaranteed_bound": self.guaranteed_bound,
            "colors_used": self.colors_used,
            "verified": self.verified,
        }


def certify(g: BipartiteGraph, coloring: EdgeColoring, method: Method,
            bound: int) -> BoundCertificate:
    report = verify_coloring(g, coloring)
    used = coloring.max_color
    return BoundCertificate(method, bound, used, report.ok and used <= bound)


@dataclass(frozen=True)
class Decomposition:
    """Edge-disjoint parts covering the graph; each X-vertex lives in one part.

    Parts are indexed by color block, so a part may be empty when the greedy
    coloring skipped a whole block.
    """

    parts: tuple[tuple[int, ...], ...]
    x_assignment: dict[int, int]

    @property
    def nonempty_parts(self) -> int:
        return sum(1 for p in self.parts if p)


def cubic_bound(delta: int) -> int:
    return delta * delta * (delta + 1) // 2


def multigraph_bound(delta: int) -> int:
    """Sum over d = 1..Delta of d * (d(Delta-1) + 1), a quartic in Delta."""
    return sum(d * (d * (delta - 1) + 1) for d in range(1, delta + 1))


def _common_x_degree(g: BipartiteGraph) -> int:
    degrees = {d for d in g.x_degrees() if d}
    if len(degrees) > 1:
        raise PreconditionViolated(
            f"X-degrees are not all equal: {sorted(degrees)}")
    return degrees.pop() if degrees else 0


def _check_biregular(g: BipartiteGraph, a, b) -> tuple[int, int]:
    if g.has_parallel_edges():
        raise PreconditionViolated("biregular decomposition needs a simple graph")
    common = _common_x_degree(g)
    if a is None:
        a = common
    elif common not in (0, a):
        raise PreconditionViolated(f"X-degree {common} differs from a={a}")
    max_y = max(g.y_degrees(), default=0)
    if b is None:
        b = max_y
    elif max_y > b:
        raise PreconditionViolated(f"Y-degree {max_y} exceeds b={b}")
    return a, b


def biregular_decompose(g: BipartiteGraph, a: int | None = None,
                        b: int | None = None) -> Decomposition:
    """Split a graph with all X-degrees ``a`` and Y-degrees ``<= b``.

    Returns at most ``b`` parts, each of maximum degree at most ``a``.
    """
    a, b = _check_biregular(g, a, b)
    if a == 0:
        return Decomposition((), {})
    hyper_colors = greedy_edge_color(from_neighborhoods(g))
    blocks = {}
    for x, deg in enumerate(g.x_degrees()):
        if deg:
            blocks[x] = (hyper_colors[x] - 1) // a
    parts = [[] for _ in range(max(blocks.values()) + 1)]
    for i, (x, _) in enumerate(g.edges):
        parts[blocks[x]].append(i)
    return Decomposition(tuple(tuple(p) for p in parts), blocks)


def _color_parts(g: BipartiteGraph, parts, width: int, colors: list) -> None:
    """König-color each part inside window ``i*width + 1 .. (i+1)*width``."""
    for i, part in enumerate(parts):
        if not part:
            continue
        sub = BipartiteGraph(g.x_count, g.y_count,
                             tuple(g.edges[e] for e in part), g.allow_multi)
        for e, c in zip(part, konig_edge_color(sub).colors):
            colors[e] = c + i * width


def interval_color_biregular(g: BipartiteGraph, a: int | None = None,
                             b: int | None = None
                             ) -> tuple[EdgeColoring, BoundCertificate]:
    """X-interval coloring with at most ``a*b`` colors.

    An X-vertex in part ``i`` (0-based) sees exactly the colors
    ``i*a + 1 .. (i+1)*a``.
    """
    a, b = _check_biregular(g, a, b)
    decomposition = biregular_decompose(g, a, b)
    colors = [0] * g.edge_count
    _color_parts(g, decomposition.parts, a, colors)
    coloring = EdgeColoring(tuple(colors))
    return coloring, certify(g, coloring, Method.BIREGULAR, a * b)


def interval_color_general(g: BipartiteGraph
                           ) -> tuple[EdgeColoring, BoundCertificate]:
    """X-interval coloring with at most Delta^2 (Delta + 1) / 2 colors.

    Degree class d gets a window of width d*Delta; windows of nonempty
    classes are stacked in increasing d starting at color 1.
    """
    if g.has_parallel_edges():
        raise PreconditionViolated(
            "general pipeline needs a simple graph; use the multigraph variant")
    delta = g.max_degree
    x_deg = g.x_degrees()
    colors = [0] * g.edge_count
    offset = 0
    for d in range(1, delta + 1):
        sub = edge_induced_subgraph(g, lambda x: x_deg[x] == d)
        if not sub.graph.edges:
            continue
        part_coloring, _ = interval_color_biregular(sub.graph, d, delta)
        sub.lift(part_coloring.shifted(offset), colors)
        offset += d * delta
    coloring = EdgeColoring(tuple(colors))
    return coloring, certify(g, coloring, Method.GENERAL, cubic_bound(delta))


def interval_color_multigraph(g: BipartiteGraph
                              ) -> tuple[EdgeColoring, BoundCertificate]:
    """X-interval coloring of a bipartite multigraph.

    Within degree class d every greedy hyperedge color class becomes its own
    part (block bundling is unsound once neighborhoods repeat vertices), so
    the class needs at most d * (d(Delta-1) + 1) colors.
    """
    delta = g.max_degree
    x_deg = g.x_degrees()
    colors = [0] * g.edge_count
    offset = 0
    for d in range(1, delta + 1):
        sub = edge_induced_subgraph(g, lambda x: x_deg[x] == d)
        if not sub.graph.edges:
            continue
        h_colors = greedy_edge_color(from_neighborhoods(sub.graph))
        classes = color_classes(h_colors)
        top = max(classes)
        parts = [[] for _ in range(top)]
        for c, xs in classes.items():
            chosen = set(xs)
            parts[c - 1] = [i for i, (x, _) in enumerate(sub.graph.edges)
                            if x in chosen]
        sub_colors = [0] * sub.graph.edge_count
        _color_parts(sub.graph, parts, d, sub_colors)
        sub.lift([c + offset for c in sub_colors], colors)
        offset += d * top
    coloring = EdgeColoring(tuple(colors))
    return coloring, certify(g, coloring, Method.MULTIGRAPH,
                             multigraph_bound(delta))
