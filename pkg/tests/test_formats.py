import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from nodalspec.errors import BadParams, ParseError
from nodalspec.families import complete, cycle, path, petersen
from nodalspec.formats import (decode_edgelist, decode_graph6, encode_edgelist, encode_graph6, iter_graph6,
                               read_graph, write_graph)
from nodalspec.graph import Graph, build_graph


def test_graph6_known_strings():
    assert read_graph(b"A_", "g6") == path(2)
    assert read_graph(b"@", "g6") == Graph(1, ())
    assert read_graph(b"?", "g6") == Graph(0, ())
    assert encode_graph6(petersen()) == nx.to_graph6_bytes(nx.petersen_graph(), header=False).strip()
    assert decode_graph6(b">>graph6<<Bw") == complete(3)


def test_edgelist_known():
    assert read_graph("2 1\n0 1\n") == path(2)
    assert write_graph(cycle(3)) == b"3 3\n0 1\n0 2\n1 2\n"
    assert decode_edgelist(b"3 2\n1 0\n2 1\n") == path(3)


@pytest.mark.parametrize("data,offset", [
    (b"2 1\n0 5\n", 6),
    (b"2 1\n0 0\n", 4),
    (b"3 2\n0 1\n1 0\n", 8),
    (b"3 2\n0 1\n", 8),
    (b"3 x\n", 2),
    (b"", 0),
])
def test_edgelist_errors(data, offset):
    with pytest.raises(ParseError) as info:
        decode_edgelist(data)
    assert info.value.offset == offset


@pytest.mark.parametrize("data", [b"", b"A", b"A_?", b"A`", b"B\x20", b"~??"])
def test_graph6_errors(data):
    with pytest.raises(ParseError):
        decode_graph6(data)


def test_graph6_size_limit_and_format_names():
    with pytest.raises(BadParams):
        encode_graph6(path(63))
    with pytest.raises(BadParams):
        read_graph(b"A_", "sparse6")


def test_iter_graph6_skips_blank_lines():
    text = "A_\n\nBw\n"
    assert list(iter_graph6(text.splitlines())) == [path(2), complete(3)]


@st.composite
def graphs(draw):
    n = draw(st.integers(0, 20))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=40) if pairs else st.just([]))
    return build_graph(n, chosen)


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_round_trips_and_networkx_agreement(g):
    assert decode_graph6(encode_graph6(g)) == g
    assert decode_edgelist(encode_edgelist(g)) == g
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    if g.n:
        assert encode_graph6(g) == nx.to_graph6_bytes(h, header=False).strip()
        back = nx.from_graph6_bytes(encode_graph6(g))
        assert sorted(tuple(sorted(e)) for e in back.edges()) == list(g.edges)
