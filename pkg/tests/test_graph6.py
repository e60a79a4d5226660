import pytest
from hypothesis import given

from indicated_coloring.corpus import all_graphs
from indicated_coloring.families import complete
from indicated_coloring.graph6 import Graph6Error, decode_graph6, encode_graph6
from indicated_coloring.graphs import Graph

from strategies_hyp import graphs


def test_single_vertex():
    assert encode_graph6(Graph(1)) == "@"
    assert decode_graph6("@") == Graph(1)


def test_k3():
    assert encode_graph6(complete(3)) == "Bw"
    assert decode_graph6("Bw") == complete(3)


def test_header_stripped():
    assert decode_graph6(">>graph6<<Bw") == complete(3)


@given(graphs(max_n=8))
def test_round_trip_random(g):
    assert decode_graph6(encode_graph6(g)) == g


def test_round_trip_exhaustive_upto_5():
    for n in range(1, 6):
        for g in all_graphs(n):
            assert decode_graph6(encode_graph6(g)) == g


def test_size_limit():
    with pytest.raises(Graph6Error):
        encode_graph6(Graph(63))


def test_malformed_inputs():
    with pytest.raises(Graph6Error):
        decode_graph6("")
    with pytest.raises(Graph6Error):
        decode_graph6("B")  # missing data byte
    with pytest.raises(Graph6Error):
        decode_graph6("Bw!")  # '!' below graph6 byte range
    with pytest.raises(Graph6Error):
        decode_graph6("~??")  # long form unsupported
    with pytest.raises(Graph6Error):
        decode_graph6("A?x")  # trailing bytes
    with pytest.raises(Graph6Error):
        decode_graph6("AO")  # nonzero padding bits
