import io

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_nx
from distbal import constructions as con
from distbal.enumeration import corpus
from distbal.errors import (
    BadHeader,
    BadLength,
    CountMismatch,
    DuplicateEdge,
    FormatError,
    LoopEdge,
    NonzeroPadding,
    SyntaxFormatError,
)
from distbal.formats import (
    parse_edge_list,
    parse_graph6,
    read_graphs,
    to_edge_list,
    to_graph6,
    write_graph,
)
from distbal.graph import build_graph


def test_graph6_k2():
    G = parse_graph6("A_")
    assert (G.n, G.edges) == (2, ((0, 1),))
    assert to_graph6(G) == "A_"


def test_graph6_empty_body():
    G = parse_graph6("D??")
    assert (G.n, G.m) == (5, 0)
    assert to_graph6(build_graph(0, [])) == "?"


def test_graph6_header_and_whitespace():
    assert parse_graph6(">>graph6<<A_\n") == parse_graph6("A_")


def test_graph6_errors():
    with pytest.raises(BadHeader) as exc:
        parse_graph6("~")
    assert exc.value.offset is not None
    with pytest.raises(BadLength):
        parse_graph6("D?")
    with pytest.raises(BadLength):
        parse_graph6("A__")
    with pytest.raises(NonzeroPadding) as exc:
        parse_graph6("A`")
    assert exc.value.offset == 1
    with pytest.raises(FormatError):
        parse_graph6("A\x7f")
    with pytest.raises(FormatError):
        parse_graph6("")


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=0, max_n=20))
def test_graph6_matches_networkx(G):
    s = to_graph6(G)
    assert all(63 <= ord(c) <= 126 for c in s)
    assert nx.to_graph6_bytes(to_nx(G), header=False).decode().strip() == s
    back = parse_graph6(s)
    assert back.n == G.n and back.same_as(G)


def test_graph6_long_form():
    G = con.path(70)
    s = to_graph6(G)
    assert s[0] == "~"
    assert s == nx.to_graph6_bytes(nx.path_graph(70), header=False).decode().strip()
    assert parse_graph6(s).same_as(G)


def test_graph6_round_trip_corpus():
    for G in corpus(6, connected_only=False):
        s = to_graph6(G)
        H = parse_graph6(s)
        assert H == G and to_graph6(H) == s


def test_read_graph6_lines_reports_line():
    with pytest.raises(BadLength, match="line 2"):
        read_graphs(io.StringIO("A_\nD?\n"), "g6")
    assert len(read_graphs(io.StringIO("A_\n\nBw\n"), "g6")) == 2


def test_edge_list_examples():
    assert parse_edge_list("2 1\n0 1") == build_graph(2, [(0, 1)])
    C4 = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0")
    assert C4.same_as(con.cycle(4))
    text = "# comment\n\n3 2  # header\n0 1\n\n1 2 # tail\n"
    assert parse_edge_list(text) == con.path(3)


def test_edge_list_errors():
    with pytest.raises(LoopEdge, match="line 2"):
        parse_edge_list("3 1\n0 0")
    with pytest.raises(DuplicateEdge, match="line 3"):
        parse_edge_list("3 2\n0 1\n1 0")
    with pytest.raises(CountMismatch):
        parse_edge_list("3 2\n0 1")
    with pytest.raises(SyntaxFormatError, match="line 2"):
        parse_edge_list("3 1\n0 x")
    with pytest.raises(SyntaxFormatError):
        parse_edge_list("3 1\n0 1 2")
    with pytest.raises(SyntaxFormatError):
        parse_edge_list("3 1\n0 5")
    with pytest.raises(SyntaxFormatError):
        parse_edge_list("")


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=0, max_n=12))
def test_edge_list_round_trip(G):
    assert parse_edge_list(to_edge_list(G)) == G
    assert read_graphs(io.StringIO(write_graph(G, "edges")), "edges") == [G]


def test_unknown_format():
    with pytest.raises(ValueError):
        write_graph(con.path(2), "sparse6")
    with pytest.raises(ValueError):
        read_graphs(io.StringIO(""), "sparse6")
