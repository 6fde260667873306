"""Instance generators: complete, random, biregular, trees, exhaustive."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterator, Optional

from .errors import InfeasibleDegrees
from .graph import BipartiteGraph


def complete_bipartite(m: int, n: int) -> BipartiteGraph:
    return BipartiteGraph(m, n, tuple((x, y) for x in range(m) for y in range(n)))


def random_biregular(a: int, b: int, n_x: int, seed: int = 0,
                     retries: int = 1000) -> Optional[BipartiteGraph]:
    """A simple (a, b)-biregular graph with ``n_x`` X-vertices, or None.

    X-stubs are paired one at a time with a uniformly random Y-stub that
    does not repeat an edge; a dead end restarts the pairing, at most
    ``retries`` times. Not uniform over biregular graphs.
    """
    if a < 1 or b < 1 or (a * n_x) % b:
        raise InfeasibleDegrees(f"a*n_x = {a * n_x} is not divisible by b = {b}")
    n_y = a * n_x // b
    if n_x and (a > n_y or b > n_x):
        return None
    rng = random.Random(seed)
    for _ in range(retries):
        left = [b] * n_y
        nbrs = [set() for _ in range(n_x)]
        edges = []
        for x in range(n_x):
            for _ in range(a):
                ys = [y for y in range(n_y) if left[y] and y not in nbrs[x]]
                if not ys:
                    break
                y = rng.choices(ys, weights=[left[y] for y in ys])[0]
                left[y] -= 1
                nbrs[x].add(y)
                edges.append((x, y))
            else:
                continue
            break
        else:
            return BipartiteGraph(n_x, n_y, tuple(sorted(edges)))
    return None


def random_bipartite(n_x: int, n_y: int, max_degree: int, density: float,
                     seed: int = 0) -> BipartiteGraph:
    """Each pair (x, y) is kept with probability ``density`` while both ends
    are below ``max_degree``; pairs are visited in a seeded random order."""
    rng = random.Random(seed)
    pairs = [(x, y) for x in range(n_x) for y in range(n_y)]
    rng.shuffle(pairs)
    dx, dy = [0] * n_x, [0] * n_y
    edges = []
    for x, y in pairs:
        if rng.random() < density and dx[x] < max_degree and dy[y] < max_degree:
            edges.append((x, y))
            dx[x] += 1
            dy[y] += 1
    return BipartiteGraph(n_x, n_y, tuple(sorted(edges)))


def random_tree(n: int, seed: int = 0) -> BipartiteGraph:
    """Random recursive tree on ``n`` vertices, X = even depth."""
    rng = random.Random(seed)
    parent = [None] + [rng.randrange(i) for i in range(1, n)]
    depth = [0] * n
    for v in range(1, n):
        depth[v] = depth[parent[v]] + 1
    index, counts = {}, [0, 0]
    for v in range(n):
        side = depth[v] % 2
        index[v] = counts[side]
        counts[side] += 1
    edges = []
    for v in range(1, n):
        u = parent[v]
        x, y = (u, v) if depth[u] % 2 == 0 else (v, u)
        edges.append((index[x], index[y]))
    return BipartiteGraph(counts[0], counts[1], tuple(sorted(edges)))


def _components(edges):
    parent = {}

    def find(v):
        while parent.setdefault(v, v) != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for x, y in edges:
        parent[find(("x", x))] = find(("y", y))
    groups: dict = {}
    for x, y in edges:
        groups.setdefault(find(("x", x)), []).append((x, y))
    return list(groups.values())


def _component_key(edges) -> tuple:
    xs = sorted({x for x, _ in edges})
    ys = sorted({y for _, y in edges})
    xi = {x: i for i, x in enumerate(xs)}
    yi = {y: j for j, y in enumerate(ys)}
    matrix = [[0] * len(ys) for _ in xs]
    for x, y in edges:
        matrix[xi[x]][yi[y]] += 1
    if len(xs) <= len(ys):
        # permute the smaller side, sort the vectors of the other side
        best = min(tuple(sorted(tuple(matrix[i][j] for i in perm)
                                for j in range(len(ys))))
                   for perm in permutations(range(len(xs))))
    else:
        best = min(tuple(sorted(tuple(matrix[i][j] for j in perm)
                                for i in range(len(xs))))
                   for perm in permutations(range(len(ys))))
    return (len(xs), len(ys), best)


def canonical_form(g: BipartiteGraph) -> tuple:
    """Key equal for two graphs iff they are isomorphic with X mapped to X.

    Built from components: each component is reduced to the minimal sorted
    adjacency vectors under permutations of its smaller side. Cost is
    factorial in the smaller side of the largest component, which is fine
    for the small graphs it is used on.
    """
    keys = sorted(_component_key(c) for c in _components(g.edges))
    return (g.x_count, g.y_count, tuple(keys))


def enumerate_bipartite(n_x: int, n_y: int, max_edges: int
                        ) -> Iterator[BipartiteGraph]:
    """Every simple bipartite graph on n_x + n_y vertices with at most
    ``max_edges`` edges, one per isomorphism class (parts kept apart).

    Graphs without isolated vertices are grown one edge at a time and
    deduplicated by :func:`canonical_form`; each is emitted padded with
    isolated vertices up to the requested part sizes.
    """
    level = {(): ((), 0, 0)}
    k = 0
    while True:
        for key in sorted(level):
            edges, _, _ = level[key]
            yield BipartiteGraph(n_x, n_y, edges)
        if k == max_edges:
            return
        nxt = {}
        for edges, a, b in level.values():
            present = set(edges)
            for x in range(min(a + 1, n_x)):
                for y in range(min(b + 1, n_y)):
                    if (x, y) in present:
                        continue
                    grown = tuple(sorted(present | {(x, y)}))
                    sizes = (max(a, x + 1), max(b, y + 1))
                    key = tuple(sorted(_component_key(c)
                                       for c in _components(grown)))
                    if key not in nxt:
                        nxt[key] = (grown, *sizes)
        if not nxt:
            return
        level = nxt
        k += 1


@dataclass(frozen=True)
class GeneratorSpec:
    """Describes a deterministic stream of graphs for the extremal search.

    kinds and their params:
      enumerate: n_x, n_y, max_edges
      random:    count, n_x, n_y, max_degree, density
      biregular: count, a, b, n_x
      trees:     count, n
    """

    kind: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    def as_dict(self) -> dict:
        return {"kind": self.kind, "params": dict(self.params), "seed": self.seed}

    @classmethod
    def from_dict(cls, d: dict) -> "GeneratorSpec":
        return cls(d["kind"], dict(d.get("params", {})), int(d.get("seed", 0)))


def stream(spec: GeneratorSpec) -> Iterator[BipartiteGraph]:
    p = spec.params
    if spec.kind == "enumerate":
        yield from enumerate_bipartite(p["n_x"], p["n_y"], p["max_edges"])
    elif spec.kind == "random":
        for i in range(p["count"]):
            yield random_bipartite(p["n_x"], p["n_y"], p["max_degree"],
                                   p["density"], seed=spec.seed + i)
    elif spec.kind == "biregular":
        for i in range(p["count"]):
            g = random_biregular(p["a"], p["b"], p["n_x"], seed=spec.seed + i)
            if g is not None:
                yield g
    elif spec.kind == "trees":
        for i in range(p["count"]):
            yield random_tree(p["n"], seed=spec.seed + i)
    else:
        raise ValueError(f"unknown generator kind {spec.kind!r}")
