import io

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pocket_spectra import graph6
from pocket_spectra.errors import Graph6ParseError
from pocket_spectra.graph import complete, empty, path, random_graph

from conftest import to_nx


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 70), st.integers(0, 2**32 - 1))
def test_round_trip_and_networkx_agreement(n, seed):
    g = random_graph(n, 0.3, np.random.default_rng(seed))
    text = graph6.encode(g)
    assert graph6.decode(text) == g
    assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def test_known_strings():
    assert graph6.encode(complete(1)) == "@"
    assert graph6.encode(path(3)) == "Bg"
    assert graph6.decode(">>graph6<<Bw") == complete(3)
    assert graph6.decode(b"Bg\n") == path(3)


def test_long_form_header():
    g = empty(63)
    text = graph6.encode(g)
    assert text.startswith("~??~")
    assert graph6.decode(text) == g


@pytest.mark.parametrize(
    "text,offset",
    [("", 0), ("B", 1), ("Bgg", 2), ("B g", 1), ("?", 0), ("~~???????", 0), ("Bh", 1)],
)
def test_parse_errors_carry_offsets(text, offset):
    with pytest.raises(Graph6ParseError) as exc:
        graph6.decode(text)
    assert exc.value.offset == offset


def test_stream_reading_continues_past_errors():
    items = list(graph6.iter_graph6(["Bg", "", "B!", "Bw"]))
    assert [ln for ln, _ in items] == [1, 3, 4]
    assert isinstance(items[1][1], Graph6ParseError)
    with pytest.raises(Graph6ParseError):
        graph6.read_graph6(io.StringIO("Bg\nB!\n"))
    buf = io.StringIO()
    graph6.write_graph6(buf, [path(3), complete(3)])
    assert graph6.read_graph6(io.StringIO(buf.getvalue())) == [path(3), complete(3)]
