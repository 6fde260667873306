import json

import pytest

from xinterval.cli import run_cli
from xinterval.generators import complete_bipartite, random_bipartite
from xinterval.io import emit_coloring, emit_graph, parse_coloring
from xinterval.graph import BipartiteGraph, EdgeColoring


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def out_json(capsys):
    return json.loads(capsys.readouterr().out)


def test_color_general(files, capsys):
    g = files("g.txt", emit_graph(random_bipartite(6, 6, 4, 0.5, 2)))
    assert run_cli(["color", g, "--method", "general"]) == 0
    cert = out_json(capsys)
    assert cert["method"] == "general" and cert["verified"]


@pytest.mark.parametrize("method", ["auto", "biregular", "general",
                                    "multigraph", "delta6", "palette"])
def test_color_every_method_on_k33(files, capsys, tmp_path, method):
    g = files("g.txt", emit_graph(complete_bipartite(3, 3)))
    out = str(tmp_path / "c.txt")
    assert run_cli(["color", g, "--method", method, "-o", out]) == 0
    assert out_json(capsys)["verified"]
    assert run_cli(["verify", g, out]) == 0


def test_auto_prefers_smallest_guarantee(files, capsys):
    g = files("g.txt", emit_graph(complete_bipartite(6, 6)))
    assert run_cli(["color", g]) == 0
    assert out_json(capsys)["guaranteed_bound"] == 6  # palette: 6 * 1


def test_palette_with_input_coloring(files, capsys):
    g = files("g.txt", emit_graph(complete_bipartite(2, 2)))
    c = files("c.txt", emit_coloring(EdgeColoring((1, 2, 2, 1))))
    assert run_cli(["color", g, "--method", "palette", "--coloring", c]) == 0
    bad = files("bad.txt", emit_coloring(EdgeColoring((1, 1, 2, 2))))
    assert run_cli(["color", g, "--method", "palette", "--coloring", bad]) == 3


def test_verify_tampered(files, capsys):
    g = files("g.txt", emit_graph(complete_bipartite(2, 2)))
    c = files("c.txt", emit_coloring(EdgeColoring((1, 2, 2, 2))))
    assert run_cli(["verify", g, c]) == 1
    assert not out_json(capsys)["proper"]
    short = files("s.txt", emit_coloring(EdgeColoring((1, 2))))
    assert run_cli(["verify", g, short]) == 1


def test_biregular_on_non_biregular(files):
    g = files("g.txt", emit_graph(BipartiteGraph(2, 2, ((0, 0), (0, 1), (1, 0)))))
    assert run_cli(["color", g, "--method", "biregular"]) == 3
    assert run_cli(["decompose", g]) == 3


def test_delta6_precondition(files):
    g = files("g.txt", emit_graph(complete_bipartite(1, 7)))
    assert run_cli(["color", g, "--method", "delta6"]) == 3


def test_exact(files, capsys, tmp_path):
    g = files("g.txt", emit_graph(complete_bipartite(3, 2)))
    out = str(tmp_path / "c.txt")
    assert run_cli(["exact", g, "-o", out]) == 0
    assert out_json(capsys)["chi_int"] == 4
    assert parse_coloring(open(out).read()).max_color == 4
    assert run_cli(["exact", g, "--t-max", "3"]) == 1
    assert run_cli(["exact", g, "--budget", "1"]) == 1


def test_decompose(files, capsys):
    g = files("g.txt", emit_graph(complete_bipartite(2, 2)))
    assert run_cli(["decompose", g]) == 0
    data = out_json(capsys)
    assert sorted(e for p in data["parts"] for e in p) == [0, 1, 2, 3]


def test_gen(capsys, tmp_path):
    assert run_cli(["gen", "complete", "2", "3"]) == 0
    assert "edge 1 2" in capsys.readouterr().out
    assert run_cli(["gen", "-o", str(tmp_path / "b.txt"), "biregular", "2", "3", "6"]) == 0
    assert run_cli(["gen", "biregular", "2", "3", "4"]) == 3
    assert run_cli(["gen", "biregular", "5", "5", "2"]) == 1
    assert run_cli(["gen", "random", "4", "4", "2", "0.5", "--seed", "3"]) == 0
    assert run_cli(["gen", "tree", "7"]) == 0


def test_search(capsys, tmp_path, monkeypatch):
    frontier = str(tmp_path / "f.txt")
    args = ["search", "--kind", "enumerate", "--param", "n_x=2",
            "--param", "n_y=2", "--param", "max_edges=3", "--frontier", frontier]
    assert run_cli(args) == 0
    assert out_json(capsys)["graphs_examined"] == 6  # 1 + 1 + 3 + 1
    assert open(frontier).readline().strip() == "xinterval-frontier 1"
    assert run_cli(args + ["--resume"]) == 0
    assert out_json(capsys)["graphs_examined"] == 6
    monkeypatch.setenv("XINTERVAL_SEARCH_BUDGET", "0")
    assert run_cli(["search", "--kind", "trees", "--param", "count=2",
                    "--param", "n=4"]) == 1
    assert out_json(capsys)["budget_exhausted"]
    monkeypatch.setenv("XINTERVAL_SEARCH_BUDGET", "many")
    assert run_cli(["search", "--kind", "trees", "--param", "count=2"]) == 2


def test_search_missing_param():
    assert run_cli(["search", "--kind", "trees", "--param", "count=2"]) == 2


def test_dot(files, capsys):
    g = files("g.txt", emit_graph(complete_bipartite(2, 2)))
    c = files("c.txt", emit_coloring(EdgeColoring((1, 2, 2, 1))))
    assert run_cli(["dot", g, "--coloring", c]) == 0
    assert 'label="2"' in capsys.readouterr().out


def test_usage_errors(files):
    assert run_cli([]) == 2
    assert run_cli(["color"]) == 2
    assert run_cli(["color", "/nonexistent/file"]) == 2
    assert run_cli(["color", files("bad.txt", "not a graph\n")]) == 2
    assert run_cli(["color", files("g.txt", "x"), "--method", "bogus"]) == 2
