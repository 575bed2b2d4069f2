import json

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pocket_spectra.catalog import parse_graph
from pocket_spectra.errors import AsymmetricPocket, InvalidEdge, InvalidParameter
from pocket_spectra.graph import Graph, complete, cycle, empty, join, path, random_graph
from pocket_spectra.isomorphism import are_isomorphic
from pocket_spectra.pockets import (
    EdgePocketSpec,
    VertexPocketSpec,
    build_edge_pockets,
    build_vertex_pockets,
    corona,
    edge_corona,
    pocket_blocks,
    spec_from_json,
    validate,
)
from pocket_spectra.suites import random_edge_spec, random_vertex_spec

from conftest import to_nx


def iso(g, h):
    return are_isomorphic(g, h)[0]


def test_vertex_pocket_examples():
    assert iso(build_vertex_pockets(VertexPocketSpec(complete(2), (0,), path(2), 0)), path(3))
    p4 = build_vertex_pockets(VertexPocketSpec(complete(2), (0, 1), complete(2), 0))
    assert iso(p4, path(4)) and iso(p4, corona(complete(2), complete(1)))
    g = build_vertex_pockets(VertexPocketSpec(path(4), (0, 1), join(complete(1), cycle(4)), 0))
    assert g.order == 12


def test_vertex_pocket_errors():
    with pytest.raises(InvalidParameter):
        VertexPocketSpec(complete(2), (0,), path(2), 5)
    with pytest.raises(InvalidParameter):
        VertexPocketSpec(complete(3), (0, 0), path(2), 0)
    with pytest.raises(InvalidParameter):
        VertexPocketSpec(complete(3), (3,), path(2), 0)
    with pytest.raises(InvalidParameter):
        VertexPocketSpec(complete(3), (), path(2), 0)


def test_edge_pocket_examples():
    diamond = build_edge_pockets(EdgePocketSpec(complete(3), ((0, 1),), complete(3), (0, 1)))
    assert diamond.order == 4 and diamond.size == 5
    assert build_edge_pockets(EdgePocketSpec(complete(4), ((0, 1), (2, 3)), complete(5), (0, 1))).order == 10
    all_edges = tuple(complete(3).edges())
    assert build_edge_pockets(EdgePocketSpec(complete(3), all_edges, complete(5), (0, 1))).order == 12


def test_edge_pocket_errors():
    with pytest.raises(InvalidEdge):
        EdgePocketSpec(path(3), ((0, 2),), complete(3), (0, 1))
    with pytest.raises(InvalidEdge):
        EdgePocketSpec(path(3), ((0, 1), (1, 0)), complete(3), (0, 1))
    with pytest.raises(InvalidEdge):
        EdgePocketSpec(path(3), ((0, 1),), path(3), (0, 2))
    # P4 minus an end is P3, minus the next vertex is K1 + K2
    with pytest.raises(AsymmetricPocket):
        EdgePocketSpec(path(3), ((0, 1),), path(4), (0, 1))
    with pytest.raises(InvalidParameter):
        EdgePocketSpec(path(3), ((0, 1),), complete(3), (0, 1), frozenset({3}))


def test_corona_examples():
    assert iso(corona(complete(2), complete(1)), path(4))
    net = corona(cycle(3), complete(1))
    assert net.order == 6 and sorted(net.degrees(), reverse=True) == [3, 3, 3, 1, 1, 1]
    ec = edge_corona(complete(3), complete(1))
    assert ec.order == 6 and ec.size == 9
    with pytest.raises(InvalidParameter):
        edge_corona(empty(3), complete(1))


def test_validate_examples():
    r = validate(VertexPocketSpec(path(2), (0,), join(complete(1), cycle(4)), 0))
    assert r.specified_degree_full and r.h_remainder_regular == 2
    r = validate(EdgePocketSpec(complete(4), ((0, 1), (2, 3)), complete(5), (0, 1)))
    assert r.specified_degree_full and r.h_remainder_regular == 2
    assert r.ek_regular == 1 and r.ek_spanning
    r = validate(VertexPocketSpec(path(2), (0,), path(4), 1))
    assert not r.specified_degree_full and r.h_remainder_regular is None
    assert json.dumps(r.to_json())


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_vertex_pocket_counts(seed):
    spec = random_vertex_spec(np.random.default_rng(seed))
    g = build_vertex_pockets(spec)
    n, m, k = spec.n, spec.m, spec.k
    assert g.order == n + k * (m - 1)
    assert g.size == spec.F.size + k * spec.H.size
    assert g.induced_subgraph(range(n)) == spec.F
    for block in pocket_blocks(spec):
        assert g.induced_subgraph(list(block)) == spec.remainder


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_edge_pocket_counts(seed):
    spec = random_edge_spec(np.random.default_rng(seed))
    g = build_edge_pockets(spec)
    n, m, k = spec.n, spec.m, spec.k
    assert g.order == n + k * (m - 2)
    assert g.size == spec.F.size + k * (spec.H.size - 1)
    assert g.induced_subgraph(range(n)) == spec.F
    for block, (hu, hv) in zip(pocket_blocks(spec), spec.oriented_edges()):
        # the host edge plus the copy reproduces H
        assert iso(g.induced_subgraph([hu, hv] + list(block)), spec.H)


@pytest.mark.parametrize("seed", range(10))
def test_corona_matches_networkx_construction(seed):
    rng = np.random.default_rng(seed)
    f = random_graph(int(rng.integers(1, 6)), 0.5, rng)
    h = random_graph(int(rng.integers(1, 4)), 0.5, rng)
    ref = to_nx(f)
    for w in range(f.order):
        base = ref.number_of_nodes()
        ref.add_edges_from((base + a, base + b) for a, b in h.edges())
        ref.add_nodes_from(range(base, base + h.order))
        ref.add_edges_from((w, base + i) for i in range(h.order))
    assert nx.is_isomorphic(ref, to_nx(corona(f, h)))


def test_flip_changes_only_orientation():
    h = parse_graph("K2vP3")
    f = path(3)
    plain = EdgePocketSpec(f, ((0, 1), (1, 2)), h, (0, 1))
    flipped = EdgePocketSpec(f, ((0, 1), (1, 2)), h, (0, 1), frozenset({1}))
    assert flipped.oriented_edges() == [(0, 1), (2, 1)]
    assert build_edge_pockets(plain).order == build_edge_pockets(flipped).order


@pytest.mark.parametrize("seed", range(5))
def test_json_round_trip(seed):
    rng = np.random.default_rng(seed)
    for spec in (random_vertex_spec(rng), random_edge_spec(rng)):
        back = spec_from_json(json.dumps(spec.to_json()))
        assert back == spec
    with pytest.raises(InvalidParameter):
        spec_from_json({"type": "other", "F": "A_", "H": "A_"})
