"""Bipartite (multi)graphs, edge colorings and the coloring verifier.

Edges are addressed by their position in ``BipartiteGraph.edges``; every
coloring in the package is a sequence aligned with that list, which keeps
parallel edges distinguishable without edge keys.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .errors import DuplicateEdge, IndexOutOfRange, LengthMismatch


@dataclass(frozen=True)
class BipartiteGraph:
    x_count: int
    y_count: int
    edges: tuple[tuple[int, int], ...]
    allow_multi: bool = False

    def __post_init__(self):
        if self.x_count < 0 or self.y_count < 0:
            raise IndexOutOfRange("vertex counts must be nonnegative")
        edges = tuple((int(x), int(y)) for x, y in self.edges)
        object.__setattr__(self, "edges", edges)
        for x, y in edges:
            if not (0 <= x < self.x_count) or not (0 <= y < self.y_count):
                raise IndexOutOfRange(
                    f"edge ({x}, {y}) outside {self.x_count}x{self.y_count}")
        if not self.allow_multi and len(set(edges)) != len(edges):
            dup = next(e for e, k in Counter(edges).items() if k > 1)
            raise DuplicateEdge(f"edge {dup} appears more than once")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def x_degrees(self) -> list[int]:
        deg = [0] * self.x_count
        for x, _ in self.edges:
            deg[x] += 1
        return deg

    def y_degrees(self) -> list[int]:
        deg = [0] * self.y_count
        for _, y in self.edges:
            deg[y] += 1
        return deg

    @property
    def max_degree(self) -> int:
        return max(self.x_degrees() + self.y_degrees(), default=0)

    @property
    def max_x_degree(self) -> int:
        return max(self.x_degrees(), default=0)

    def has_parallel_edges(self) -> bool:
        return len(set(self.edges)) != len(self.edges)

    def edges_at_x(self) -> list[list[int]]:
        """Edge positions incident to each X-vertex."""
        inc = [[] for _ in range(self.x_count)]
        for i, (x, _) in enumerate(self.edges):
            inc[x].append(i)
        return inc

    def edges_at_y(self) -> list[list[int]]:
        inc = [[] for _ in range(self.y_count)]
        for i, (_, y) in enumerate(self.edges):
            inc[y].append(i)
        return inc

    def neighborhood(self, x: int) -> list[int]:
        """N_G(x) as a multiset (repeated for parallel edges)."""
        return [y for xx, y in self.edges if xx == x]


def build_bipartite(x_count: int, y_count: int,
                    edges: Iterable[tuple[int, int]],
                    allow_multi: bool = False) -> BipartiteGraph:
    return BipartiteGraph(x_count, y_count, tuple(edges), allow_multi)


@dataclass(frozen=True)
class DegreeProfile:
    x_degrees: list[int]
    y_degrees: list[int]
    max_degree: int
    max_x_degree: int

    def __iter__(self):
        return iter((self.x_degrees, self.y_degrees,
                     self.max_degree, self.max_x_degree))


def degree_profile(g: BipartiteGraph) -> DegreeProfile:
    xd, yd = g.x_degrees(), g.y_degrees()
    return DegreeProfile(xd, yd, max(xd + yd, default=0), max(xd, default=0))


@dataclass(frozen=True)
class LoopedMultigraph:
    """Undirected multigraph on ``0..vertex_count-1`` where loops are allowed.

    A loop ``(v, v)`` adds 2 to the degree of ``v``.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        for u, v in edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise IndexOutOfRange(f"edge ({u}, {v}) out of range")

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def incidence(self) -> list[list[int]]:
        """Edge positions at each vertex; a loop is listed once."""
        inc = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            if v != u:
                inc[v].append(i)
        return inc


@dataclass(frozen=True)
class EdgeColoring:
    colors: tuple[int, ...]

    def __post_init__(self):
        colors = tuple(int(c) for c in self.colors)
        if any(c < 1 for c in colors):
            raise ValueError("colors must be positive integers")
        object.__setattr__(self, "colors", colors)

    @property
    def max_color(self) -> int:
        return max(self.colors, default=0)

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, i):
        return self.colors[i]

    def shifted(self, offset: int) -> "EdgeColoring":
        return EdgeColoring(tuple(c + offset for c in self.colors))


def x_palette(g: BipartiteGraph, colors: Sequence[int], x: int) -> frozenset[int]:
    return frozenset(colors[i] for i, (xx, _) in enumerate(g.edges) if xx == x)


def is_interval(palette: Iterable[int]) -> bool:
    s = set(palette)
    return not s or max(s) - min(s) + 1 == len(s)


@dataclass(frozen=True)
class VerificationReport:
    proper: bool
    interval_at_X: bool
    violating_vertices: list[int] = field(default_factory=list)
    violating_edge_pairs: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.proper and self.interval_at_X


def _colors_of(coloring) -> Sequence[int]:
    return coloring.colors if isinstance(coloring, EdgeColoring) else coloring


def verify_coloring(g: BipartiteGraph, coloring) -> VerificationReport:
    """Check properness everywhere and the interval condition on X.

    Every clashing edge pair is reported once, even for parallel edges.
    """
    colors = _colors_of(coloring)
    if len(colors) != g.edge_count:
        raise LengthMismatch(
            f"{len(colors)} colors for {g.edge_count} edges")
    clashes = set()
    for incident in g.edges_at_x() + g.edges_at_y():
        by_color: dict[int, list[int]] = {}
        for i in incident:
            by_color.setdefault(colors[i], []).append(i)
        for group in by_color.values():
            clashes.update(combinations(sorted(group), 2))
    bad_x = [x for x, inc in enumerate(g.edges_at_x())
             if not is_interval(colors[i] for i in inc)]
    pairs = sorted(clashes)
    return VerificationReport(not pairs, not bad_x, bad_x, pairs)


@dataclass(frozen=True)
class Subgraph:
    """An edge-induced subgraph plus the maps back into its parent.

    X-vertices are renumbered compactly; Y keeps the parent numbering.
    """

    graph: BipartiteGraph
    x_map: tuple[int, ...]
    edge_map: tuple[int, ...]

    def lift(self, colors: Sequence[int], target: list) -> list:
        """Write subgraph edge colors into ``target`` at parent positions."""
        for i, c in enumerate(_colors_of(colors)):
            target[self.edge_map[i]] = c
        return target


def edge_induced_subgraph(g: BipartiteGraph,
                          select: Callable[[int], bool]) -> Subgraph:
    """Subgraph of all edges incident to X-vertices for which ``select`` holds."""
    x_map = tuple(x for x in range(g.x_count) if select(x))
    new_index = {x: i for i, x in enumerate(x_map)}
    edge_map = tuple(i for i, (x, _) in enumerate(g.edges) if x in new_index)
    edges = tuple((new_index[g.edges[i][0]], g.edges[i][1]) for i in edge_map)
    sub = BipartiteGraph(len(x_map), g.y_count, edges, g.allow_multi)
    return Subgraph(sub, x_map, edge_map)
