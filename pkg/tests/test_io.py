import pytest
from hypothesis import given

from conftest import graphs
from fsgraph.graph import GraphError, complete_bipartite
from fsgraph.io import dumps, loads, read_graph, write_graph


def test_plain_format():
    text = "3 2\n0 1\n1 2\n"
    g = loads(text)
    assert g.edges() == [(0, 1), (1, 2)]
    assert dumps(g) == text


def test_bipartite_format(tmp_path):
    g = complete_bipartite(2, 2)
    write_graph(g, tmp_path / "k.txt")
    assert (tmp_path / "k.txt").read_text().startswith("bipartite 2 4\n")
    assert read_graph(tmp_path / "k.txt") == g


def test_errors():
    with pytest.raises(GraphError):
        loads("3 2\n0 1\n")
    with pytest.raises(GraphError):
        loads("")
    with pytest.raises(GraphError):
        loads("bipartite 2 1\n0 1\n")


@given(graphs(max_n=10))
def test_round_trip(g):
    assert loads(dumps(g)) == g
