"""Hypergraphs with repeated edges and their greedy proper edge coloring."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import IndexOutOfRange
from .graph import BipartiteGraph


@dataclass(frozen=True)
class Hypergraph:
    vertex_count: int
    hyperedges: tuple[tuple[int, ...], ...]
    origin: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        edges = tuple(tuple(sorted(int(v) for v in h)) for h in self.hyperedges)
        object.__setattr__(self, "hyperedges", edges)
        for h in edges:
            for v in h:
                if not 0 <= v < self.vertex_count:
                    raise IndexOutOfRange(f"vertex {v} out of range")
        if self.origin is not None:
            object.__setattr__(self, "origin", tuple(self.origin))
            if len(self.origin) != len(edges):
                raise ValueError("origin must map every hyperedge")

    @property
    def rank(self) -> int:
        return max((len(h) for h in self.hyperedges), default=0)

    def degrees(self) -> list[int]:
        # a hyperedge holding v twice counts twice
        deg = [0] * self.vertex_count
        for h in self.hyperedges:
            for v in h:
                deg[v] += 1
        return deg

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def greedy_bound(self) -> int:
        """k(Delta - 1) + 1 for rank k and maximum degree Delta."""
        return max(1, self.rank * (self.max_degree - 1) + 1)


def from_neighborhoods(g: BipartiteGraph) -> Hypergraph:
    """One hyperedge N_G(x) per X-vertex, over the vertex set Y."""
    nbrs = [[] for _ in range(g.x_count)]
    for x, y in g.edges:
        nbrs[x].append(y)
    return Hypergraph(g.y_count, tuple(tuple(n) for n in nbrs),
                      tuple(range(g.x_count)))


def intersect(h1, h2) -> bool:
    return not set(h1).isdisjoint(h2)


def greedy_edge_color(h: Hypergraph) -> list[int]:
    """First-fit coloring of hyperedges in list order.

    Each hyperedge gets the smallest positive color not already used by an
    earlier hyperedge sharing a vertex with it.
    """
    seen: list[set[int]] = [set() for _ in range(h.vertex_count)]
    colors = []
    for edge in h.hyperedges:
        support = set(edge)
        taken = set().union(*(seen[v] for v in support)) if support else set()
        c = 1
        while c in taken:
            c += 1
        colors.append(c)
        for v in support:
            seen[v].add(c)
    return colors


def color_classes(colors) -> dict[int, list[int]]:
    classes: dict[int, list[int]] = {}
    for i, c in enumerate(colors):
        classes.setdefault(c, []).append(i)
    return classes

