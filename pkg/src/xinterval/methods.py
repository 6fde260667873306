"""Dispatch by method name and the ``auto`` choice of method."""

from __future__ import annotations

from .degree_six import (DEFAULT_SEARCH_BUDGET, RESTRICTED_BOUND,
                         interval_color_delta6, interval_color_deg6_restricted)
from .general import (BoundCertificate, Method, cubic_bound,
                      interval_color_biregular, interval_color_general,
                      interval_color_multigraph, multigraph_bound)
from .graph import BipartiteGraph, EdgeColoring
from .konig import konig_edge_color
from .palette import interval_from_palettes, x_palettes

METHOD_NAMES = ("auto", "biregular", "general", "multigraph", "delta6", "palette")


def guarantees(g: BipartiteGraph) -> dict[Method, int]:
    """A priori color bound of every method applicable to ``g``."""
    out = {}
    simple = not g.has_parallel_edges()
    delta = g.max_degree
    x_deg = {d for d in g.x_degrees() if d}
    if simple and len(x_deg) <= 1:
        a = x_deg.pop() if x_deg else 0
        out[Method.BIREGULAR] = a * max(g.y_degrees(), default=0)
    if simple:
        out[Method.GENERAL] = cubic_bound(delta)
    out[Method.MULTIGRAPH] = multigraph_bound(delta)
    if delta <= 6:
        if 3 in g.x_degrees():
            out[Method.DELTA6] = 17
        else:
            out[Method.DELTA6_RESTRICTED] = RESTRICTED_BOUND
    out[Method.PALETTE] = g.max_x_degree * len(x_palettes(g, konig_edge_color(g)))
    return out


def choose_method(g: BipartiteGraph) -> Method:
    order = list(Method)
    return min(guarantees(g).items(), key=lambda kv: (kv[1], order.index(kv[0])))[0]


def color(g: BipartiteGraph, method: str | Method = "auto",
          coloring: EdgeColoring | None = None,
          budget: int | None = DEFAULT_SEARCH_BUDGET
          ) -> tuple[EdgeColoring, BoundCertificate, bool]:
    """Run one coloring method; returns (coloring, certificate, fallback).

    ``coloring`` is the proper input coloring for the palette method.
    ``fallback`` is only ever true for the degree-six composition.
    """
    if method == "auto":
        method = choose_method(g)
    method = Method(method)
    if method is Method.BIREGULAR:
        return (*interval_color_biregular(g), False)
    if method is Method.GENERAL:
        return (*interval_color_general(g), False)
    if method is Method.MULTIGRAPH:
        return (*interval_color_multigraph(g), False)
    if method is Method.DELTA6_RESTRICTED:
        return (*interval_color_deg6_restricted(g), False)
    if method is Method.DELTA6:
        return tuple(interval_color_delta6(g, budget))  # type: ignore[return-value]
    return (*interval_from_palettes(g, coloring), False)
