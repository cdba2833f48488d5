import pytest

from fsgraph.cli import main
from fsgraph.graph import complete, complete_bipartite, make_graph, path, star, theta0
from fsgraph.io import read_graph, write_graph


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, g in {"k4": complete(4), "p4": path(4), "k33": complete_bipartite(3, 3), "star7": make_graph(7, star(7).edges()), "theta": theta0()}.items():
        out[name] = tmp_path / f"{name}.txt"
        write_graph(g, out[name])
    return out


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def test_analyze(files, capsys):
    code, out = run(capsys, "analyze", "--x", files["k4"], "--y", files["p4"], "--components")
    assert code == 0 and out.startswith("count 1 ")
    code, out = run(capsys, "analyze", "--x", files["star7"], "--y", files["theta"])
    assert out.startswith("count 6 ")
    code, out = run(capsys, "analyze", "--x", files["p4"], "--y", files["p4"], "--isolated")
    assert out.startswith("isolated ")
    code, out = run(capsys, "analyze", "--x", files["k4"], "--y", files["k4"], "--exchange", 0, 1)
    assert out.strip() == "exchange 01"


def test_classify(files, capsys):
    assert run(capsys, "classify", "--y", files["theta"])[1].strip() == "theta0_exception"
    assert run(capsys, "classify", "--y", files["k4"])[1].strip() == "wilsonian"
    assert run(capsys, "classify", "--y", files["k33"])[1].strip() == "bipartite_exception"


@pytest.mark.parametrize("family,n", [("five-block", 6), ("bipartite-four-block", 4), ("sequence-gadget", 2), ("large-gadget", 0)])
def test_construct(tmp_path, capsys, family, n):
    out = tmp_path / family
    code, text = run(capsys, "construct", "--family", family, "--n", n, "--out", out)
    assert code == 0 and (out / "manifest.txt").exists()
    graphs = [p for p in out.iterdir() if p.name != "manifest.txt"]
    assert graphs and all(read_graph(p).n > 0 for p in graphs)


def test_exchange(files, capsys):
    code, out = run(capsys, "exchange", "--x", files["k33"], "--y", files["k33"], "--u", 0, "--v", 3, "--strategy", "bip62")
    assert code == 0 and "strategy" in out
    code, out = run(capsys, "exchange", "--x", files["p4"], "--y", files["p4"], "--u", 0, "--v", 3, "--strategy", "bfs")
    assert code == 1 and out.startswith("none")
    code, out = run(capsys, "exchange", "--x", files["k4"], "--y", files["k4"], "--u", 0, "--v", 2, "--sigma", "3,2,1,0")
    assert code == 0 and out.splitlines()[-1] == "strategy direct"


def test_exchange_reports_bad_preconditions(files, capsys):
    code, _ = run(capsys, "exchange", "--x", files["k33"], "--y", files["k33"], "--u", 0, "--v", 1, "--strategy", "bip62")
    assert code == 2


def test_embed(files, tmp_path, capsys):
    edge = tmp_path / "edge.txt"
    write_graph(complete(2), edge)
    code, out = run(capsys, "embed", "--g", edge, "--h", edge, "--x", files["p4"], "--y", files["p4"], "--sets", "0;1,2,3")
    assert out.strip() == "0 1"
    code, out = run(capsys, "embed", "--g", edge, "--h", edge, "--x", files["p4"], "--y", files["p4"], "--sets", "0;2,3")
    assert out.strip() == "none"


def test_montecarlo(tmp_path, capsys):
    csv_a, csv_b, svg = tmp_path / "a.csv", tmp_path / "b.csv", tmp_path / "a.svg"
    for target in (csv_a, csv_b):
        code, _ = run(capsys, "montecarlo", "--size", 5, "--pgrid", "0.3,0.9", "--trials", 4, "--seed", 1, "--out", target, "--no-timing", "--svg", svg)
        assert code == 0
    assert csv_a.read_bytes() == csv_b.read_bytes()
    assert len(csv_a.read_text().splitlines()) == 3
    assert svg.read_text().startswith("<svg")
    code, _ = run(capsys, "montecarlo", "--mode", "bip", "--size", 3, "--pgrid", "1.0", "--trials", 2, "--out", tmp_path / "c.csv")
    assert code == 0


def test_hitting(tmp_path, capsys):
    code, out = run(capsys, "hitting", "--n", 4, "--trials", 3, "--out", tmp_path / "h.csv")
    assert code == 0 and out.startswith("trials 3 ")
    assert (tmp_path / "h.csv").read_text().startswith("n,seed,trial,t_iso,t_conn")
