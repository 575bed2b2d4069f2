import networkx as nx
import pytest

from pocket_spectra import graph6
from pocket_spectra.catalog import (
    ROOK_G6,
    SHRIKHANDE_G6,
    graphs_of_order,
    parse_graph,
    regular_graphs,
    rook,
    shrikhande,
    small_graph_lines,
    small_graphs,
    split_graph_list,
)
from pocket_spectra.errors import InvalidInput
from pocket_spectra.graph import complete, complete_bipartite, cycle, disjoint_union, join

from conftest import from_nx, to_nx


def test_catalog_counts():
    assert [len(graphs_of_order(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]
    assert len(small_graphs()) == len(small_graph_lines()) == 208
    assert len(regular_graphs(6)) == 20


@pytest.mark.parametrize("n", range(1, 7))
def test_catalog_is_complete_and_irredundant(n):
    mine = [to_nx(g) for g in graphs_of_order(n)]
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n]
    for i, g in enumerate(mine):
        assert not any(nx.is_isomorphic(g, h) for h in mine[i + 1:])
    assert all(any(nx.is_isomorphic(a, g) for g in mine) for a in atlas)


def _cayley_z4(gens):
    g = nx.Graph()
    g.add_nodes_from(range(16))
    for a in range(4):
        for b in range(4):
            for da, db in gens:
                g.add_edge(4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4)
    return g


def test_seed_literals_match_constructions():
    shr = _cayley_z4([(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)])
    assert graph6.encode(from_nx(shr)) == SHRIKHANDE_G6
    assert shrikhande() == from_nx(shr)
    k4 = nx.complete_graph(4)
    assert nx.is_isomorphic(to_nx(rook()), nx.cartesian_product(k4, k4))
    assert rook() == graph6.decode(ROOK_G6)


def test_expression_parser():
    assert parse_graph("K1vC4") == join(complete(1), cycle(4))
    assert parse_graph("2K3") == disjoint_union(complete(3), complete(3))
    assert parse_graph("K2,3") == complete_bipartite(2, 3)
    assert parse_graph("(K2 u K1) v K1").order == 4
    assert parse_graph("C4xK2").size == 12
    assert parse_graph("K1vshrikhande").order == 17
    assert parse_graph("g6:" + graph6.encode(cycle(5))) == cycle(5)
    for bad in ("", "K", "Q3", "(K2", "K2 v", "0K2", "K2)"):
        with pytest.raises(InvalidInput):
            parse_graph(bad)


def test_parse_graph_file(tmp_path):
    path = tmp_path / "g.g6"
    path.write_text(graph6.encode(cycle(6)) + "\n")
    assert parse_graph(str(path)) == cycle(6)
    empty = tmp_path / "e.g6"
    empty.write_text("")
    with pytest.raises(InvalidInput):
        parse_graph(str(empty))


def test_split_graph_list():
    assert split_graph_list("shrikhande,rook") == ["shrikhande", "rook"]
    assert split_graph_list("K2,3,C4") == ["K2,3", "C4"]
