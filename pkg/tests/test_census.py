from diamwidth.census import (
    census,
    census_to_csv,
    connected_graph_counts,
    enumerate_all_graphs,
    is_pattern_free,
)
from diamwidth.families import complete_graph, path_graph
from diamwidth.formats import from_graph6
from diamwidth.graphs import INFINITE, diameter
from diamwidth.width import treedepth_exact


def test_connected_counts_anchor():
    assert connected_graph_counts(6) == [1, 1, 2, 6, 21, 112]


def test_all_graph_counts():
    assert [len(l) for l in enumerate_all_graphs(6)[1:]] == [1, 2, 4, 11, 34, 156]


def test_census_nothing_is_k1_free():
    rows = census(3, path_graph(1), "subgraph", 2, "td")
    assert all(r.count == 0 and r.max_width is None for r in rows)


def test_census_triangle_free_diameter2():
    rows = census(4, complete_graph(3), "subgraph", 2, "td")
    assert [r.count for r in rows] == [1, 1, 1, 2]  # K1; K2; P3; K13 and C4


def test_census_rows_reverify():
    forbidden = complete_graph(3)
    rows = census(5, forbidden, "subgraph", 2, "td")
    for row in rows:
        if row.witness_graph6 is None:
            continue
        g = from_graph6(row.witness_graph6)
        assert g.n == row.n
        dia = diameter(g)
        assert dia != INFINITE and dia <= 2
        assert is_pattern_free(g, forbidden, "subgraph")
        assert treedepth_exact(g).value == row.max_width


def test_census_csv_schema():
    rows = census(3, complete_graph(3), "subgraph", 2, "td")
    text = census_to_csv(rows)
    assert text.splitlines()[0] == "n,count,max_width,witness_graph6"
    assert len(text.splitlines()) == 4
