"""Colorings for maximum degree six.

X-degrees in {1, 2, 4, 5, 6}: glue G to a copy of itself, pad every vertex
to degree 6 with cross edges and loops, split the 6-regular result into
three 2-factors, color factor i alternately with 2i-1 and 2i, then fix the
few palettes at X that are not intervals by moving colors 1..4 up by 6.
That stays within 10 colors. Degree-3 X-vertices are handled by a bounded
search for an X-interval 7-coloring, and the two pieces are stacked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import BudgetExhausted, InternalError, PreconditionViolated
from .general import BoundCertificate, Method, certify, interval_color_biregular
from .graph import (BipartiteGraph, EdgeColoring, LoopedMultigraph,
                    edge_induced_subgraph, verify_coloring)
from .konig import konig_edge_color
from .oracle import IntervalSearch

# provenance kinds for edges of the doubled graph
G_EDGE, COPY_EDGE, CROSS_EDGE, LOOP = "g", "copy", "cross", "loop"

ALLOWED_X_DEGREES = frozenset({0, 1, 2, 4, 5, 6})

# palette at an X-vertex -> colors whose edges move up by 6
RECOLOR_TABLE = {
    frozenset({1, 2, 5, 6}): frozenset({1, 2}),
    frozenset({1, 2, 3, 4, 6}): frozenset({1, 2, 3, 4}),
    frozenset({1, 2, 3, 5, 6}): frozenset({1, 2, 3}),
    frozenset({1, 2, 4, 5, 6}): frozenset({1, 2}),
    frozenset({1, 3, 4, 5, 6}): frozenset({1}),
}

RESTRICTED_BOUND = 10
SEARCH_WINDOW = 7
FALLBACK_WINDOW = 18
DEFAULT_SEARCH_BUDGET = 200_000


class Provenance(NamedTuple):
    kind: str
    ref: int  # G-edge position for g/copy, G-vertex for cross, H-vertex for loop


@dataclass(frozen=True)
class DoubledGraph:
    """The 6-regular multigraph built from G and its copy.

    H-vertex ids: X-vertex x is ``x``, Y-vertex y is ``x_count + y``, and the
    copy of vertex ``u`` is ``n + u`` with ``n = x_count + y_count``.
    """

    graph: LoopedMultigraph
    provenance: tuple[Provenance, ...]
    source: BipartiteGraph

    def restrict(self, h_colors) -> EdgeColoring:
        colors = [0] * self.source.edge_count
        for c, (kind, ref) in zip(h_colors, self.provenance):
            if kind == G_EDGE:
                colors[ref] = c
        return EdgeColoring(tuple(colors))


@dataclass(frozen=True)
class TwoFactorization:
    factors: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]


def _check_degree_six(g: BipartiteGraph, restricted: bool) -> None:
    delta = g.max_degree
    if delta > 6:
        raise PreconditionViolated(f"maximum degree {delta} exceeds 6")
    if restricted:
        bad = sorted({d for d in g.x_degrees() if d not in ALLOWED_X_DEGREES})
        if bad:
            raise PreconditionViolated(
                f"X-degrees {bad} not allowed; only 1, 2, 4, 5, 6")


def build_doubled(g: BipartiteGraph) -> DoubledGraph:
    _check_degree_six(g, restricted=True)
    n = g.x_count + g.y_count
    edges: list[tuple[int, int]] = []
    prov: list[Provenance] = []
    for i, (x, y) in enumerate(g.edges):
        edges.append((x, g.x_count + y))
        prov.append(Provenance(G_EDGE, i))
    for i, (x, y) in enumerate(g.edges):
        edges.append((n + x, n + g.x_count + y))
        prov.append(Provenance(COPY_EDGE, i))
    for v, d in enumerate(g.x_degrees() + g.y_degrees()):
        if d % 2:
            edges.append((v, n + v))
            prov.append(Provenance(CROSS_EDGE, v))
            loops = 3 - (d + 1) // 2
        else:
            loops = 3 - d // 2
        for w in (v, n + v):
            for _ in range(loops):
                edges.append((w, w))
                prov.append(Provenance(LOOP, w))
    h = LoopedMultigraph(2 * n, tuple(edges))
    return DoubledGraph(h, tuple(prov), g)


def euler_orientation(h: LoopedMultigraph) -> list[tuple[int, int]]:
    """Orient every edge along Hierholzer circuits, one per component.

    Returns ``(tail, head)`` per edge position. Every vertex of an even
    graph ends with in-degree equal to out-degree; a loop is one of each.
    """
    inc = h.incidence()
    used = [False] * len(h.edges)
    ptr = [0] * h.vertex_count
    oriented: list[tuple[int, int] | None] = [None] * len(h.edges)
    for start in range(h.vertex_count):
        stack = [start]
        while stack:
            v = stack[-1]
            while ptr[v] < len(inc[v]) and used[inc[v][ptr[v]]]:
                ptr[v] += 1
            if ptr[v] == len(inc[v]):
                stack.pop()
                continue
            e = inc[v][ptr[v]]
            used[e] = True
            a, b = h.edges[e]
            w = b if a == v else a
            oriented[e] = (v, w)
            stack.append(w)
    return oriented  # type: ignore[return-value]


def petersen_two_factorization(h: LoopedMultigraph) -> TwoFactorization:
    """Decompose a 6-regular looped multigraph into three 2-factors.

    After an Euler orientation each vertex has 3 outgoing and 3 incoming
    edges; König-coloring the out-copy/in-copy split graph with 3 colors
    gives each vertex one outgoing and one incoming edge per color.
    """
    degrees = h.degrees()
    if any(d != 6 for d in degrees):
        raise PreconditionViolated("graph is not 6-regular")
    oriented = euler_orientation(h)
    split = BipartiteGraph(h.vertex_count, h.vertex_count, tuple(oriented),
                           allow_multi=True)
    classes = konig_edge_color(split).colors
    factors = tuple(tuple(e for e, c in enumerate(classes) if c == k)
                    for k in (1, 2, 3))
    return TwoFactorization(factors)  # type: ignore[arg-type]


def _cycles(h: LoopedMultigraph, factor) -> list[list[int]]:
    """Edge sequences of the cycles of a 2-regular spanning subgraph."""
    at: dict[int, list[int]] = {}
    for e in factor:
        u, v = h.edges[e]
        at.setdefault(u, []).append(e)
        if v != u:
            at.setdefault(v, []).append(e)
    seen = set()
    cycles = []
    for first in factor:
        if first in seen:
            continue
        u, v = h.edges[first]
        cycle = [first]
        seen.add(first)
        if u != v:
            prev, here = first, v
            while True:
                options = [e for e in at[here] if e != prev]
                nxt = options[0] if options else prev
                if nxt == first:
                    break
                cycle.append(nxt)
                seen.add(nxt)
                a, b = h.edges[nxt]
                here = b if a == here else a
                prev = nxt
        cycles.append(cycle)
    return cycles


def alternate_color_factors(doubled: DoubledGraph,
                            factorization: TwoFactorization) -> EdgeColoring:
    """Color factor i alternately with 2i-1, 2i along each of its cycles.

    An odd cycle is rotated to start at a cross edge or loop so the single
    clash of the alternation sits on an edge outside G.
    """
    h = doubled.graph
    colors = [0] * len(h.edges)
    for i, factor in enumerate(factorization.factors, start=1):
        for cycle in _cycles(h, factor):
            if len(cycle) % 2:
                breaks = [k for k, e in enumerate(cycle)
                          if doubled.provenance[e].kind in (CROSS_EDGE, LOOP)]
                if not breaks:
                    raise InternalError(
                        "odd cycle made of G-edges in a bipartite input")
                cycle = cycle[breaks[0]:] + cycle[:breaks[0]]
            for k, e in enumerate(cycle):
                colors[e] = 2 * i - 1 + k % 2
    return EdgeColoring(tuple(colors))


def recolor_bad_palettes(g: BipartiteGraph, coloring: EdgeColoring) -> EdgeColoring:
    colors = list(coloring.colors)
    for incident in g.edges_at_x():
        shift = RECOLOR_TABLE.get(frozenset(colors[e] for e in incident))
        if shift:
            for e in incident:
                if colors[e] in shift:
                    colors[e] += 6
    return EdgeColoring(tuple(colors))


def interval_color_deg6_restricted(g: BipartiteGraph
                                   ) -> tuple[EdgeColoring, BoundCertificate]:
    """X-interval coloring with at most 10 colors for X-degrees in {1,2,4,5,6}."""
    doubled = build_doubled(g)
    factorization = petersen_two_factorization(doubled.graph)
    phi = doubled.restrict(alternate_color_factors(doubled, factorization))
    if not verify_coloring(g, phi).proper:
        raise InternalError("alternate coloring is not proper on G")
    coloring = recolor_bad_palettes(g, phi)
    return coloring, certify(g, coloring, Method.DELTA6_RESTRICTED,
                             RESTRICTED_BOUND)


def interval7_search_36(g: BipartiteGraph,
                        budget: int | None = DEFAULT_SEARCH_BUDGET
                        ) -> EdgeColoring | None:
    """Search for a coloring with at most 7 colors that is interval on X.

    Intended for graphs whose X-vertices all have degree 3 and whose
    Y-degrees are at most 6. Returns None if the node budget runs out or no
    such coloring exists.
    """
    if not g.edges:
        return EdgeColoring(())
    search = IntervalSearch(g, budget=budget)
    try:
        return search.solve(SEARCH_WINDOW)
    except BudgetExhausted:
        return None


@dataclass(frozen=True)
class Delta6Result:
    coloring: EdgeColoring
    certificate: BoundCertificate
    fallback: bool

    def __iter__(self):
        return iter((self.coloring, self.certificate, self.fallback))


def interval_color_delta6(g: BipartiteGraph,
                          budget: int | None = DEFAULT_SEARCH_BUDGET
                          ) -> Delta6Result:
    """X-interval coloring of a graph with maximum degree at most 6.

    Degree-3 X-vertices take colors 1..7 through :func:`interval7_search_36`;
    the others take the next 10 colors through the restricted pipeline. If
    the search gives up, the degree-3 part falls back to the biregular
    construction in a window of 18 colors and ``fallback`` is set.
    """
    _check_degree_six(g, restricted=False)
    x_deg = g.x_degrees()
    threes = edge_induced_subgraph(g, lambda x: x_deg[x] == 3)
    rest = edge_induced_subgraph(g, lambda x: x_deg[x] != 3)
    if not threes.graph.edges:
        coloring, cert = interval_color_deg6_restricted(g)
        return Delta6Result(coloring, cert, False)

    colors = [0] * g.edge_count
    fallback = False
    found = interval7_search_36(threes.graph, budget)
    if found is None:
        fallback = True
        found, _ = interval_color_biregular(threes.graph, 3)
        width = FALLBACK_WINDOW
    else:
        width = SEARCH_WINDOW
    threes.lift(found, colors)
    bound = width
    if rest.graph.edges:
        rest_coloring, _ = interval_color_deg6_restricted(rest.graph)
        rest.lift(rest_coloring.shifted(width), colors)
        bound += RESTRICTED_BOUND
    coloring = EdgeColoring(tuple(colors))
    return Delta6Result(coloring, certify(g, coloring, Method.DELTA6, bound),
                        fallback)
