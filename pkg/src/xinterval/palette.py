"""Palettes of proper colorings and the palette-to-interval conversion."""

from __future__ import annotations

from typing import Optional

from .errors import NotProper
from .general import BoundCertificate, Method, certify
from .graph import (BipartiteGraph, EdgeColoring, edge_induced_subgraph,
                    verify_coloring)
from .konig import konig_edge_color


def _require_proper(g: BipartiteGraph, coloring) -> None:
    if not verify_coloring(g, coloring).proper:
        raise NotProper("input coloring is not proper")


def x_palettes(g: BipartiteGraph, coloring) -> list[tuple[tuple[int, ...], list[int]]]:
    """Distinct nonempty palettes at X with the X-vertices carrying each.

    Sorted lexicographically by palette (as an increasing tuple).
    """
    _require_proper(g, coloring)
    colors = coloring.colors if isinstance(coloring, EdgeColoring) else coloring
    groups: dict[tuple[int, ...], list[int]] = {}
    for x, incident in enumerate(g.edges_at_x()):
        if incident:
            key = tuple(sorted(colors[e] for e in incident))
            groups.setdefault(key, []).append(x)
    return sorted(groups.items())


def interval_from_palettes(g: BipartiteGraph, coloring=None
                           ) -> tuple[EdgeColoring, BoundCertificate]:
    """Turn a proper coloring with p palettes at X into an X-interval one.

    X-vertices sharing a palette P have degree |P| and every Y-neighbor has
    at most |P| edges into the group, so König colors the group with |P|
    colors, all of them present at each X-vertex. Groups are stacked in
    disjoint windows; the result uses at most Delta(X) * p colors.
    Without an input coloring a König coloring of ``g`` is used.
    """
    if coloring is None:
        coloring = konig_edge_color(g)
    groups = x_palettes(g, coloring)
    colors = [0] * g.edge_count
    offset = 0
    for palette, xs in groups:
        members = set(xs)
        sub = edge_induced_subgraph(g, members.__contains__)
        sub.lift(konig_edge_color(sub.graph).shifted(offset), colors)
        offset += len(palette)
    result = EdgeColoring(tuple(colors))
    return result, certify(g, result, Method.PALETTE,
                           g.max_x_degree * len(groups))


def count_palettes(g: BipartiteGraph, colors, scope: str = "all") -> int:
    """Distinct palettes over non-isolated vertices of X (scope 'x') or all."""
    palettes = {frozenset(colors[e] for e in inc)
                for inc in g.edges_at_x() if inc}
    if scope == "all":
        palettes |= {frozenset(colors[e] for e in inc)
                     for inc in g.edges_at_y() if inc}
    elif scope != "x":
        raise ValueError(f"unknown scope {scope!r}")
    return len(palettes)


def palette_index_bruteforce(g: BipartiteGraph, budget: int | None = 1_000_000,
                             scope: str = "all") -> Optional[int]:
    """Minimum number of palettes over all proper edge colorings.

    Exhaustive over colorings canonicalized by first use of each color, so
    at most |E| colors appear. Vertices without edges have no palette and
    are ignored. Returns None if more than ``budget`` nodes are needed.
    """
    if not g.edges:
        return 0
    degrees = g.x_degrees() + (g.y_degrees() if scope == "all" else [])
    lower = len({d for d in degrees if d})
    x_inc, y_inc = g.edges_at_x(), g.edges_at_y()
    colors = [0] * g.edge_count
    best = [None]
    nodes = [0]

    class _Done(Exception):
        pass

    def extend(i: int, top: int) -> None:
        if i == g.edge_count:
            p = count_palettes(g, colors, scope)
            if best[0] is None or p < best[0]:
                best[0] = p
                if p == lower:
                    raise _Done
            return
        x, y = g.edges[i]
        taken = {colors[e] for e in x_inc[x] + y_inc[y] if e < i}
        for c in range(1, top + 2):
            if c in taken:
                continue
            nodes[0] += 1
            if budget is not None and nodes[0] > budget:
                raise _Done
            colors[i] = c
            extend(i + 1, max(top, c))
        colors[i] = 0

    try:
        extend(0, 0)
    except _Done:
        if budget is not None and nodes[0] > budget:
            return None
    return best[0]
