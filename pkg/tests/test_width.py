import math
import random

import pytest

from diamwidth.families import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    gadget_cv_unbounded,
    path_graph,
    path_vertex_ids,
    spider,
    wall,
)
from diamwidth.graphs import edgeless_graph, graph_from_edges, induced_subgraph
from diamwidth.paths import PathWitness, longest_path
from diamwidth.polarity import er_polarity_graph
from diamwidth.width import (
    EliminationForest,
    SizeLimitError,
    WidthResult,
    pathwidth_exact,
    treedepth_bounds,
    treedepth_exact,
    treewidth_exact,
    verify_certificate,
)

from oracles import brute_pathwidth, brute_treedepth


def random_connected(n, p, seed):
    rng = random.Random(seed)
    while True:
        g = graph_from_edges(
            n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        )
        from diamwidth.graphs import is_connected

        if is_connected(g):
            return g


def test_treedepth_examples():
    assert treedepth_exact(complete_graph(6)).value == 6
    assert treedepth_exact(path_graph(7)).value == 3 == brute_treedepth(path_graph(7))
    assert treedepth_exact(cycle_graph(6)).value == 4 == brute_treedepth(cycle_graph(6))
    assert treedepth_exact(edgeless_graph(0)).value == 0


def test_treedepth_closed_form_on_paths():
    for n in range(1, 25):
        assert treedepth_exact(path_graph(n)).value == math.ceil(math.log2(n + 1))
    for n in range(1, 9):
        assert brute_treedepth(path_graph(n)) == math.ceil(math.log2(n + 1))


def test_pathwidth_examples():
    assert pathwidth_exact(path_graph(9)).value == 1
    for n in range(3, 9):
        assert pathwidth_exact(cycle_graph(n)).value == 2 == brute_pathwidth(cycle_graph(n))
    assert pathwidth_exact(complete_bipartite(3, 3)).value == 3
    assert brute_pathwidth(complete_bipartite(3, 3)) == 3


def test_treewidth_examples():
    assert treewidth_exact(complete_graph(6)).value == 5
    assert treewidth_exact(spider([2, 3, 2])).value == 1
    w = treewidth_exact(wall(2))
    assert 2 <= w.value <= 3
    assert verify_certificate(wall(2), w)


def test_certificates_verify_and_fakes_fail():
    p3 = path_graph(3)
    good = WidthResult("td", 2, EliminationForest((1, -1, 1)), True)
    assert verify_certificate(p3, good)
    fake = WidthResult("td", 1, EliminationForest((1, -1, 1)), True)
    assert not verify_certificate(p3, fake)
    cyclic = WidthResult("td", 2, EliminationForest((1, 0, 1)), True)
    assert not verify_certificate(p3, cyclic)


def test_random_self_consistency_suite():
    rng = random.Random(42)
    for i in range(200):
        n = rng.randrange(4, 9)
        g = random_connected(n, 0.4, i)
        for solver in (treedepth_exact, pathwidth_exact, treewidth_exact):
            res = solver(g)
            assert verify_certificate(g, res), (solver.__name__, g)


def test_width_chain_property():
    for i in range(25):
        g = random_connected(7, 0.35, 100 + i)
        tw = treewidth_exact(g).value
        pw = pathwidth_exact(g).value
        td = treedepth_exact(g).value
        assert tw <= pw <= td


def test_treedepth_subgraph_monotonicity():
    rng = random.Random(3)
    for i in range(12):
        g = random_connected(8, 0.4, 200 + i)
        td = treedepth_exact(g).value
        keep = [v for v in range(g.n) if rng.random() < 0.7]
        if not keep:
            continue
        sub, _ = induced_subgraph(g, keep)
        assert treedepth_exact(sub).value <= td


def test_er_family_growth():
    assert treedepth_exact(er_polarity_graph(2)).value < treedepth_exact(
        er_polarity_graph(3)
    ).value


def test_bounds():
    assert treedepth_bounds(edgeless_graph(1)) == (1, 1)
    lo, hi = treedepth_bounds(path_graph(16))
    assert lo >= 4 and hi <= 16
    assert lo <= treedepth_exact(path_graph(16)).value <= hi
    # big gadget: feed the labelled path as an explicit witness
    g = gadget_cv_unbounded(63)
    ids = path_vertex_ids(g)
    witness = PathWitness(tuple(ids), "plain", False)
    lo, hi = treedepth_bounds(g, witness)
    assert lo >= 6
    res = treedepth_exact(g)  # over the limit: bounds, not a silent value
    assert not res.exact and res.value is None and res.bounds is not None


def test_fact_sandwich_on_exact_pairs():
    for i in range(10):
        g = random_connected(8, 0.35, 300 + i)
        w = longest_path(g)
        assert w.exact
        td = treedepth_exact(g).value
        lv = w.num_vertices
        assert math.log2(lv) <= td <= lv


def test_size_limits():
    with pytest.raises(SizeLimitError):
        pathwidth_exact(complete_graph(6), limit=5)
    with pytest.raises(SizeLimitError):
        treewidth_exact(complete_graph(6), limit=5)
