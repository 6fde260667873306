"""Exit criteria. Each test prints one PASS/FAIL line (also collected in the
terminal summary) and fails if its bound or its time limit is missed."""

import random
import time
from contextlib import contextmanager

from conftest import ACCEPTANCE_LINES
from helpers import is_x_interval
from xinterval.cli import run_cli
from xinterval.degree_six import (alternate_color_factors, build_doubled,
                                  interval_color_delta6,
                                  interval_color_deg6_restricted,
                                  petersen_two_factorization)
from xinterval.general import cubic_bound, interval_color_general
from xinterval.generators import (complete_bipartite, enumerate_bipartite,
                                  random_biregular, random_bipartite)
from xinterval.graph import BipartiteGraph, edge_induced_subgraph, verify_coloring
from xinterval.hypergraph import Hypergraph, greedy_edge_color
from xinterval.io import emit_coloring, emit_graph, parse_coloring, parse_graph
from xinterval.konig import konig_edge_color
from xinterval.methods import color, guarantees
from xinterval.oracle import exact_chi_int
from xinterval.palette import interval_from_palettes, x_palettes


@contextmanager
def criterion(number, title, limit):
    info = {"detail": ""}
    start = time.perf_counter()
    try:
        yield info
    except BaseException as exc:
        line = f"FAIL [{number:>2}] {title}: {type(exc).__name__}: {exc}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < limit
    line = (f"{'PASS' if ok else 'FAIL'} [{number:>2}] {title}: {info['detail']} "
            f"({elapsed:.2f}s, limit {limit}s)")
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def without_degree_three(g):
    xd = g.x_degrees()
    return edge_induced_subgraph(g, lambda x: xd[x] != 3).graph


def with_parallel_edges(g, rng, tries=6):
    """Duplicate a few edges while every degree stays at most 6."""
    edges = list(g.edges)
    dx, dy = g.x_degrees(), g.y_degrees()
    for _ in range(tries):
        if not edges:
            break
        x, y = rng.choice(edges)
        if dx[x] < 6 and dy[y] < 6:
            edges.append((x, y))
            dx[x] += 1
            dy[y] += 1
    return BipartiteGraph(g.x_count, g.y_count, tuple(edges), allow_multi=True)


def test_1_biregular_bound(tmp_path):
    rng = random.Random(1)
    with criterion(1, "biregular colorings within ab colors", 10) as info:
        done = worst = 0
        seed = 0
        while done < 100:
            a, b = rng.randint(1, 5), rng.randint(1, 5)
            sizes = [n for n in range(1, 31) if (a * n) % b == 0 and a * n // b >= a
                     and n >= b]
            n_x = rng.choice(sizes)
            g = random_biregular(a, b, n_x, seed)
            seed += 1
            assert g is not None, (a, b, n_x)
            gf = tmp_path / "g.txt"
            cf = tmp_path / "c.txt"
            gf.write_text(emit_graph(g))
            assert run_cli(["color", str(gf), "--method", "biregular",
                            "-o", str(cf)]) == 0
            c = parse_coloring(cf.read_text())
            assert verify_coloring(g, c).ok and is_x_interval(g, c.colors)
            assert c.max_color <= a * b
            worst = max(worst, c.max_color / (a * b))
            done += 1
        info["detail"] = f"100 graphs verified, max colors/ab = {worst:.2f}"


def test_2_cubic_bound():
    with criterion(2, "general colorings within D^2(D+1)/2", 30) as info:
        worst = 0.0
        for seed in range(100):
            rng = random.Random(seed)
            n_x, n_y = rng.randint(2, 25), rng.randint(2, 25)
            g = random_bipartite(n_x, n_y, rng.randint(1, 8),
                                 rng.uniform(0.1, 0.9), seed)
            assert g.max_degree <= 8 and g.edge_count <= 200
            c, cert = interval_color_general(g)
            assert verify_coloring(g, c).ok and cert.verified
            assert c.max_color <= cubic_bound(g.max_degree)
            if g.edges:
                worst = max(worst, c.max_color / cubic_bound(g.max_degree))
        info["detail"] = f"100 graphs verified, max colors/bound = {worst:.2f}"


def test_3_restricted_degree_six():
    with criterion(3, "X-degrees in {1,2,4,5,6} within 10 colors", 30) as info:
        multi = worst = 0
        for seed in range(50):
            rng = random.Random(100 + seed)
            g = random_bipartite(rng.randint(3, 14), rng.randint(3, 14), 6,
                                 rng.uniform(0.2, 0.9), seed)
            if seed % 2:
                g = with_parallel_edges(g, rng)
            g = without_degree_three(g)
            multi += g.has_parallel_edges()
            assert g.max_degree <= 6
            assert set(g.x_degrees()) <= {0, 1, 2, 4, 5, 6}
            c, cert = interval_color_deg6_restricted(g)
            assert verify_coloring(g, c).ok and cert.verified
            assert c.max_color <= 10
            worst = max(worst, c.max_color)
        assert multi > 0
        info["detail"] = f"50 graphs ({multi} multigraphs), max colors {worst}"


def test_4_delta_six_composition():
    with criterion(4, "maximum degree 6 within 17 colors", 60) as info:
        graphs, seed = [], 0
        while len(graphs) < 30:
            rng = random.Random(1000 + seed)
            g = random_bipartite(rng.randint(6, 12), rng.randint(6, 12), 6,
                                 rng.uniform(0.4, 0.9), seed)
            seed += 1
            if g.max_degree == 6:
                graphs.append(g)
        with_threes = fallbacks = worst = 0
        for g in graphs:
            with_threes += 3 in g.x_degrees()
            c, cert, fallback = interval_color_delta6(g)
            assert verify_coloring(g, c).ok and cert.verified
            if fallback:
                fallbacks += 1
                print(f"fallback used: {emit_graph(g)!r}")
                assert c.max_color <= 28
            else:
                assert c.max_color <= 17
            worst = max(worst, c.max_color)
        assert fallbacks == 0
        info["detail"] = (f"30 graphs ({with_threes} with degree-3 X-vertices), "
                          f"max colors {worst}, fallbacks {fallbacks}")


def test_5_palette_conversion():
    with criterion(5, "palette conversion within D(X) * #palettes", 10) as info:
        count = seed = 0
        while count < 50:
            rng = random.Random(500 + seed)
            g = random_bipartite(rng.randint(3, 15), rng.randint(3, 15),
                                 rng.randint(2, 7), rng.uniform(0.2, 0.8), seed)
            seed += 1
            if len({d for d in g.x_degrees() if d}) < 2:
                continue
            base = konig_edge_color(g)
            p = len(x_palettes(g, base))
            c, cert = interval_from_palettes(g, base)
            assert verify_coloring(g, c).ok and cert.verified
            assert c.max_color <= g.max_x_degree * p
            count += 1
        info["detail"] = "50 mixed-degree graphs verified"


def constructive_results(g):
    return {m.value: color(g, m)[0] for m in guarantees(g)}


def test_6_oracle_dominance():
    with criterion(6, "exact oracle never beaten, |E| <= 8", 300) as info:
        graphs = 0
        for g in enumerate_bipartite(8, 8, 8):
            t, witness = exact_chi_int(g)
            assert verify_coloring(g, witness).ok and witness.max_color <= t
            for name, c in constructive_results(g).items():
                assert verify_coloring(g, c).ok, name
                assert t <= c.max_color, (name, emit_graph(g))
            graphs += 1
        info["detail"] = f"{graphs} isomorphism classes checked"


def test_7_regular_sanity():
    with criterion(7, "exact value of regular graphs equals Delta", 60) as info:
        checked = 0
        for d in range(1, 5):
            for n in range(d, 9):
                for seed in range(3):
                    g = random_biregular(d, d, n, seed)
                    assert exact_chi_int(g)[0] == d
                    checked += 1
        assert exact_chi_int(complete_bipartite(4, 4))[0] == 4
        info["detail"] = f"{checked} regular graphs"


def test_8_two_factorization():
    with criterion(8, "2-factorizations and proper restriction", 10) as info:
        for seed in range(50):
            rng = random.Random(800 + seed)
            g = random_bipartite(rng.randint(2, 12), rng.randint(2, 12), 6,
                                 rng.uniform(0.2, 0.9), seed)
            if seed % 3 == 0:
                g = with_parallel_edges(g, rng)
            g = without_degree_three(g)
            doubled = build_doubled(g)
            h = doubled.graph
            fact = petersen_two_factorization(h)
            covered = sorted(e for f in fact.factors for e in f)
            assert covered == list(range(len(h.edges)))
            for factor in fact.factors:
                deg = [0] * h.vertex_count
                for e in factor:
                    u, v = h.edges[e]
                    deg[u] += 1
                    deg[v] += 1
                assert deg == [2] * h.vertex_count
            phi = doubled.restrict(alternate_color_factors(doubled, fact))
            assert verify_coloring(g, phi).proper
        info["detail"] = "50 doubled graphs"


def test_9_hypergraph_greedy():
    with criterion(9, "greedy hypergraph coloring within k(D-1)+1", 5) as info:
        rng = random.Random(9)
        for _ in range(200):
            n = rng.randint(3, 20)
            deg = [0] * n
            edges = []
            for _ in range(rng.randint(0, 40)):
                e = [rng.randrange(n) for _ in range(rng.randint(1, 5))]
                if all(deg[v] + e.count(v) <= 6 for v in set(e)):
                    edges.append(tuple(e))
                    for v in e:
                        deg[v] += 1
            h = Hypergraph(n, tuple(edges))
            assert h.rank <= 5 and h.max_degree <= 6
            colors = greedy_edge_color(h)
            for i in range(len(edges)):
                for j in range(i + 1, len(edges)):
                    if set(edges[i]) & set(edges[j]):
                        assert colors[i] != colors[j]
            if edges:
                assert max(colors) <= h.rank * (h.max_degree - 1) + 1
        info["detail"] = "200 hypergraphs"


def test_10_io_and_cli(tmp_path, capsys):
    with criterion(10, "I/O round trip and CLI exit codes", 5) as info:
        for seed in range(100):
            rng = random.Random(seed)
            g = random_bipartite(rng.randint(0, 10), rng.randint(0, 10), 5, 0.4, seed)
            if seed % 4 == 0:
                g = with_parallel_edges(g, rng)
            text = emit_graph(g)
            assert parse_graph(text) == g and emit_graph(parse_graph(text)) == text
            c = konig_edge_color(g)
            assert parse_coloring(emit_coloring(c)) == c

        good = tmp_path / "g.txt"
        good.write_text(emit_graph(complete_bipartite(2, 3)))
        uneven = tmp_path / "u.txt"
        uneven.write_text(emit_graph(BipartiteGraph(2, 2, ((0, 0), (0, 1), (1, 0)))))
        coloring = tmp_path / "c.txt"
        tampered = tmp_path / "t.txt"
        tampered.write_text(emit_coloring(parse_coloring(
            "xinterval-coloring 1\nmax_color 1\ncolors 1 1 1 1 1 1\n")))
        frontier = tmp_path / "f.txt"
        cases = [
            (["gen", "complete", "2", "2"], 0),
            (["gen", "biregular", "2", "3", "4"], 3),
            (["color", str(good), "--method", "general", "-o", str(coloring)], 0),
            (["color", str(uneven), "--method", "biregular"], 3),
            (["verify", str(good), str(coloring)], 0),
            (["verify", str(good), str(tampered)], 1),
            (["exact", str(good)], 0),
            (["exact", str(good), "--t-max", "2"], 1),
            (["decompose", str(good)], 0),
            (["decompose", str(uneven)], 3),
            (["search", "--kind", "trees", "--param", "count=3", "--param", "n=5",
              "--frontier", str(frontier)], 0),
            (["search", "--kind", "trees", "--param", "count=3", "--param", "n=5",
              "--budget", "0"], 1),
            (["dot", str(good), "--coloring", str(coloring)], 0),
            (["color", str(tmp_path / "missing.txt")], 2),
            (["frobnicate"], 2),
        ]
        for argv, expected in cases:
            assert run_cli(argv) == expected, argv
        capsys.readouterr()
        info["detail"] = f"100 round trips, {len(cases)} CLI exit-code cases"
