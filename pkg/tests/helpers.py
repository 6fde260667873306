"""Strategies and independent checkers shared by the test modules."""

from itertools import product

from hypothesis import strategies as st

from xinterval.graph import BipartiteGraph


@st.composite
def bipartite_graphs(draw, max_x=6, max_y=6, max_edges=14, multi=False,
                     max_degree=None):
    n_x = draw(st.integers(0, max_x))
    n_y = draw(st.integers(0, max_y))
    if not n_x or not n_y:
        return BipartiteGraph(n_x, n_y, ())
    pair = st.tuples(st.integers(0, n_x - 1), st.integers(0, n_y - 1))
    raw = draw(st.lists(pair, max_size=max_edges, unique=not multi))
    if max_degree is not None:
        dx, dy, kept = [0] * n_x, [0] * n_y, []
        for x, y in raw:
            if dx[x] < max_degree and dy[y] < max_degree:
                kept.append((x, y))
                dx[x] += 1
                dy[y] += 1
        raw = kept
    return BipartiteGraph(n_x, n_y, tuple(raw), multi)


def is_x_interval(g, colors):
    """Proper everywhere and consecutive at every X-vertex; written without
    the package verifier so it can check it."""
    if len(colors) != len(g.edges):
        return False
    for i in range(len(g.edges)):
        for j in range(i + 1, len(g.edges)):
            (a, b), (c, d) = g.edges[i], g.edges[j]
            if (a == c or b == d) and colors[i] == colors[j]:
                return False
    for x in range(g.x_count):
        pal = [colors[i] for i, e in enumerate(g.edges) if e[0] == x]
        if pal and max(pal) - min(pal) + 1 != len(pal):
            return False
    return True


def brute_chi_int(g, t_cap=8):
    """Smallest t with an X-interval coloring in 1..t by full enumeration."""
    if not g.edges:
        return 0
    for t in range(1, t_cap + 1):
        for colors in product(range(1, t + 1), repeat=len(g.edges)):
            if is_x_interval(g, colors):
                return t
    return None
