"""Proper Delta-edge coloring of bipartite multigraphs by alternating paths."""

from __future__ import annotations

from .graph import BipartiteGraph, EdgeColoring


def _smallest_missing(table: dict) -> int:
    c = 1
    while c in table:
        c += 1
    return c


def konig_edge_color(g: BipartiteGraph) -> EdgeColoring:
    """Color the edges of ``g`` with at most Delta(g) colors.

    Edges are inserted in list order. For edge (x, y) take the smallest
    color a missing at x and b missing at y; if a is present at y, swap a/b
    along the alternating path leaving y, which cannot reach x, then use a.
    """
    n = g.x_count
    at: list[dict[int, int]] = [{} for _ in range(n + g.y_count)]
    colors = [0] * g.edge_count

    for i, (x, y) in enumerate(g.edges):
        u, v = x, n + y
        alpha = _smallest_missing(at[u])
        beta = _smallest_missing(at[v])
        if alpha in at[v]:
            path = []
            w, c = v, alpha
            while c in at[w]:
                e = at[w][c]
                path.append(e)
                ex, ey = g.edges[e]
                w = ex if w == n + ey else n + ey
                c = beta if c == alpha else alpha
            for e in path:
                ex, ey = g.edges[e]
                del at[ex][colors[e]]
                del at[n + ey][colors[e]]
            for e in path:
                ex, ey = g.edges[e]
                colors[e] = beta if colors[e] == alpha else alpha
                at[ex][colors[e]] = e
                at[n + ey][colors[e]] = e
        colors[i] = alpha
        at[u][alpha] = i
        at[v][alpha] = i
    return EdgeColoring(tuple(colors))
