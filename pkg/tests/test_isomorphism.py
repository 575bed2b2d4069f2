import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pocket_spectra.catalog import graphs_of_order, parse_graph, rook, shrikhande
from pocket_spectra.errors import SizeLimitExceeded
from pocket_spectra.graph import complete, cycle, disjoint_union, random_graph
from pocket_spectra.isomorphism import are_isomorphic, distinguish, nonisomorphism_witness, witness_holds

from conftest import to_nx


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 10), st.integers(0, 2**32 - 1))
def test_relabeled_graphs_are_isomorphic(n, seed):
    rng = np.random.default_rng(seed)
    g = random_graph(n, float(rng.uniform(0.2, 0.8)), rng)
    h = g.relabel([int(x) for x in rng.permutation(n)])
    ok, perm = are_isomorphic(g, h)
    assert ok and witness_holds(g, h, perm)


def test_agrees_with_networkx_on_order_5_catalog():
    graphs = graphs_of_order(5)
    for i, g in enumerate(graphs):
        for h in graphs[i:]:
            assert are_isomorphic(g, h)[0] == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_regular_pairs_need_more_than_degrees():
    c6, two_k3 = cycle(6), disjoint_union(complete(3), complete(3))
    assert not are_isomorphic(c6, two_k3)[0]
    assert distinguish(c6, two_k3)[0] == "refinement-distinguisher"
    assert nonisomorphism_witness(parse_graph("K1vC6"), parse_graph("K1v2K3"))[1] == "induced-neighborhood"


def test_size_cap():
    big = complete(17)
    with pytest.raises(SizeLimitExceeded):
        are_isomorphic(big, big)
    assert nonisomorphism_witness(big, big)[0] == "not-checked"


def test_seed_pair_neighborhoods():
    s, r = shrikhande(), rook()
    assert s.regularity() == r.regularity() == 6
    assert nonisomorphism_witness(s, r) == ("refinement-distinguisher", "induced-neighborhood")
    assert not nx.is_isomorphic(to_nx(s), to_nx(r))


def test_exhausted_backtracking_grade():
    # Two non-isomorphic 3-regular graphs on 8 vertices whose vertex
    # neighborhoods are all independent sets.
    cube = parse_graph("C4xK2")
    mobius = nx.circulant_graph(8, [1, 4])
    from conftest import from_nx
    grade, _ = nonisomorphism_witness(cube, from_nx(mobius))
    assert grade in ("refinement-distinguisher", "exhausted-backtracking")
