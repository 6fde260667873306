"""One-sided (X-interval) edge colorings of bipartite graphs.

Constructive colorings with certified color bounds, an exact backtracking
oracle for small graphs, instance generators and an extremal search.
"""

from .degree_six import (build_doubled, interval7_search_36,
                         interval_color_delta6, interval_color_deg6_restricted,
                         petersen_two_factorization)
from .errors import (BudgetExhausted, DuplicateEdge, IndexOutOfRange,
                     InfeasibleDegrees, InternalError, LengthMismatch, NotProper,
                     ParseError, PreconditionViolated, XIntervalError)
from .general import (BoundCertificate, Decomposition, Method,
                      biregular_decompose, interval_color_biregular,
                      interval_color_general, interval_color_multigraph)
from .graph import (BipartiteGraph, EdgeColoring, LoopedMultigraph,
                    VerificationReport, build_bipartite, degree_profile,
                    edge_induced_subgraph, verify_coloring)
from .hypergraph import Hypergraph, from_neighborhoods, greedy_edge_color
from .konig import konig_edge_color
from .methods import choose_method, color
from .oracle import SearchReport, exact_chi_int, extremal_search
from .palette import interval_from_palettes, palette_index_bruteforce, x_palettes

__version__ = "0.1.0"
