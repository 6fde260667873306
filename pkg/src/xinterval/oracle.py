"""Exact chi'_int(G, X) by backtracking, and an extremal search harness."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .errors import BudgetExhausted
from .general import cubic_bound, multigraph_bound
from .graph import BipartiteGraph, EdgeColoring

log = logging.getLogger(__name__)


class IntervalSearch:
    """Backtracking search for X-interval colorings with a fixed color count.

    Variables are edges, picked most-constrained first. The domain of an
    edge at X-vertex x of degree d is every color free at both endpoints
    that keeps the colors at x within a span of d. ``nodes`` counts
    assignments tried across all calls and is capped by ``budget``.
    """

    def __init__(self, g: BipartiteGraph, budget: int | None = None):
        self.g = g
        self.budget = budget
        self.nodes = 0
        self.x_deg = g.x_degrees()

    def _tick(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExhausted(f"node budget {self.budget} exhausted")

    def solve(self, t: int) -> Optional[EdgeColoring]:
        """An X-interval coloring using only colors 1..t, or None."""
        g = self.g
        if g.max_degree > t:
            return None
        self.t = t
        self.colors = [0] * g.edge_count
        self.at_x = [set() for _ in range(g.x_count)]
        self.at_y = [set() for _ in range(g.y_count)]
        self.free = set(range(g.edge_count))
        if self._extend(root=True):
            return EdgeColoring(tuple(self.colors))
        return None

    def _domain(self, e: int) -> list[int]:
        x, y = self.g.edges[e]
        used_x, used_y = self.at_x[x], self.at_y[y]
        if used_x:
            span = self.x_deg[x] - 1
            lo, hi = max(1, max(used_x) - span), min(self.t, min(used_x) + span)
        else:
            lo, hi = 1, self.t
        return [c for c in range(lo, hi + 1)
                if c not in used_x and c not in used_y]

    def _extend(self, root: bool = False) -> bool:
        if not self.free:
            return True
        best, best_dom = None, None
        for e in sorted(self.free):
            dom = self._domain(e)
            if not dom:
                return False
            if best_dom is None or len(dom) < len(best_dom):
                best, best_dom = e, dom
                if len(dom) == 1:
                    break
        if root:
            # reversing c -> t+1-c maps solutions to solutions
            best_dom = [c for c in best_dom if 2 * c <= self.t + 1]
        x, y = self.g.edges[best]
        self.free.discard(best)
        for c in best_dom:
            self._tick()
            self.colors[best] = c
            self.at_x[x].add(c)
            self.at_y[y].add(c)
            if self._extend():
                return True
            self.at_x[x].discard(c)
            self.at_y[y].discard(c)
        self.colors[best] = 0
        self.free.add(best)
        return False


def default_t_max(g: BipartiteGraph) -> int:
    """|E| always suffices; the proven bounds cap it further."""
    bound = (multigraph_bound if g.has_parallel_edges() else cubic_bound)(
        g.max_degree)
    return min(g.edge_count, bound)


def exact_chi_int(g: BipartiteGraph, t_max: int | None = None,
                  budget: int | None = None
                  ) -> Optional[tuple[int, EdgeColoring]]:
    """Smallest t in [Delta, t_max] with an X-interval t-coloring.

    Returns None when no t up to ``t_max`` works. Raises BudgetExhausted
    when more than ``budget`` search nodes would be needed.
    """
    return _exact(g, t_max, IntervalSearch(g, budget))


def _exact(g, t_max, search):
    if not g.edges:
        return 0, EdgeColoring(())
    if t_max is None:
        t_max = default_t_max(g)
    for t in range(g.max_degree, t_max + 1):
        found = search.solve(t)
        if found is not None:
            return t, found
    return None


@dataclass
class SearchReport:
    graphs_examined: int = 0
    max_ratio: Optional[Fraction] = None
    witness: Optional[BipartiteGraph] = None
    witness_coloring: Optional[EdgeColoring] = None
    witness_chi: Optional[int] = None
    budget_spent: int = 0
    ratios: list[Fraction] = field(default_factory=list)

    def record(self, g: BipartiteGraph, chi: int, coloring: EdgeColoring):
        self.graphs_examined += 1
        delta = g.max_degree
        if delta == 0:
            return
        ratio = Fraction(chi, delta * delta)
        self.ratios.append(ratio)
        if self.max_ratio is None or ratio > self.max_ratio:
            self.max_ratio = ratio
            self.witness, self.witness_coloring, self.witness_chi = g, coloring, chi

    def as_dict(self) -> dict:
        from .io import emit_graph

        return {
            "graphs_examined": self.graphs_examined,
            "max_ratio": None if self.max_ratio is None else str(self.max_ratio),
            "witness": None if self.witness is None else emit_graph(self.witness),
            "witness_colors": (None if self.witness_coloring is None
                               else list(self.witness_coloring.colors)),
            "witness_chi": self.witness_chi,
            "budget_spent": self.budget_spent,
        }


def extremal_search(spec, budget: int | None = None,
                    frontier: str | Path | None = None,
                    resume: bool = False) -> SearchReport:
    """Run the exact oracle over a generated stream and track chi'_int / Delta^2.

    ``spec`` is a :class:`~xinterval.generators.GeneratorSpec`. ``budget``
    caps the total number of search nodes. With ``frontier`` set, progress
    is saved after every graph, and ``resume=True`` continues from the saved
    position. On exhaustion BudgetExhausted is raised carrying the partial
    report.
    """
    from .generators import stream
    from .io import read_frontier, write_frontier

    report = SearchReport()
    position = 0
    if resume and frontier is not None and Path(frontier).exists():
        saved_spec, position, report = read_frontier(Path(frontier).read_text())
        if saved_spec != spec:
            raise ValueError("frontier was written for a different generator")

    def save():
        if frontier is not None:
            Path(frontier).write_text(write_frontier(spec, position, report))

    for index, g in enumerate(stream(spec)):
        if index < position:
            continue
        remaining = None if budget is None else budget - report.budget_spent
        if remaining is not None and remaining <= 0:
            save()
            raise BudgetExhausted(report=report)
        search = IntervalSearch(g, remaining)
        try:
            result = _exact(g, None, search)
        except BudgetExhausted:
            report.budget_spent += min(search.nodes, remaining)
            save()
            raise BudgetExhausted(report=report) from None
        report.budget_spent += search.nodes
        if result is None:
            raise RuntimeError("no X-interval coloring within |E| colors")
        report.record(g, *result)
        position = index + 1
        save()
    log.info("examined %d graphs, max ratio %s", report.graphs_examined,
             report.max_ratio)
    return report
