"""Graph file formats and cross-edge files."""

import json

import pytest

from digraph_spectra import GraphFormatError, build_digraph, load_graph, parse_graph, write_graph
from digraph_spectra.io import graph_to_text, parse_cross_edges
from conftest import SIX_NODE_EDGES

import numpy as np


def test_text_round_trip(tmp_path):
    g = build_digraph(6, SIX_NODE_EDGES)
    path = tmp_path / "g.txt"
    write_graph(g, path)
    assert load_graph(path) == g


def test_json_round_trip(tmp_path):
    g = build_digraph(6, SIX_NODE_EDGES)
    path = tmp_path / "g.json"
    write_graph(g, path)
    assert load_graph(path) == g
    obj = json.loads(path.read_text())
    assert obj["n"] == 6 and len(obj["edges"]) == len(SIX_NODE_EDGES)


def test_round_trip_is_weight_exact(tmp_path):
    rng = np.random.default_rng(3)
    for k in range(20):
        n = int(rng.integers(1, 8))
        edges = []
        for t in range(1, n + 1):
            for h in range(1, n + 1):
                if rng.random() < 0.4:
                    edges.append((t, h, float(rng.normal()) or 1.0))
        g = build_digraph(n, edges)
        for suffix in (".txt", ".json"):
            path = tmp_path / f"g{k}{suffix}"
            write_graph(g, path)
            assert load_graph(path).weights == g.weights


def test_comments_and_blank_lines():
    g = parse_graph("# a comment\n\nn 2\n1 2 0.5\n# trailing\n")
    assert g.n == 2 and g.weight(2, 1) == 0.5


def test_provenance_survives_both_formats(tmp_path):
    g = build_digraph(3, [(1, 2, 1.0)], provenance={"kind": "dcid", "m": 3})
    for suffix in (".txt", ".json"):
        path = tmp_path / f"p{suffix}"
        write_graph(g, path)
        assert load_graph(path).provenance == {"kind": "dcid", "m": 3}


@pytest.mark.parametrize("text, line", [
    ("1 2 1.0\n", 1),            # edge before header
    ("n 2\n1 2\n", 2),           # short edge line
    ("n 2\n1 2 x\n", 2),         # bad weight
    ("n 2\nn 3\n", 2),           # duplicate header
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphFormatError) as err:
        parse_graph(text)
    assert err.value.line == line


def test_missing_header():
    with pytest.raises(GraphFormatError):
        parse_graph("# nothing\n")


def test_json_errors():
    with pytest.raises(GraphFormatError):
        parse_graph("{not json")
    with pytest.raises(GraphFormatError):
        parse_graph('{"n": 2}')


def test_text_output_is_plain_directives():
    g = build_digraph(2, [(1, 2, 0.1)])
    text = graph_to_text(g)
    assert text.splitlines()[0] == "n 2"
    assert "0.10000000000000001" in text  # 17 significant digits


def test_cross_edge_sections():
    e12, e21 = parse_cross_edges("# cross\ne12\n1 2 0.5\ne21\n2 1 -3\n1 3 2\n")
    assert e12 == [(1, 2, 0.5)]
    assert e21 == [(2, 1, -3.0), (1, 3, 2.0)]


def test_cross_edge_line_outside_section():
    with pytest.raises(GraphFormatError):
        parse_cross_edges("1 2 3\n")
