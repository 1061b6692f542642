import random
from itertools import combinations

import pytest

from diamwidth.canon import CanonicalLimitError, are_isomorphic, canonical_code
from diamwidth.families import cycle_graph, path_graph, spider, wall
from diamwidth.graphs import graph_from_edges


def permuted(g, seed):
    rng = random.Random(seed)
    perm = list(range(g.n))
    rng.shuffle(perm)
    edges = [(perm[u], perm[v]) for u, v in g.edges()]
    return graph_from_edges(g.n, edges)


def test_relabel_invariance():
    for g in [path_graph(6), cycle_graph(7), spider([2, 3, 1]), wall(2)]:
        code = canonical_code(g)
        for seed in range(6):
            assert canonical_code(permuted(g, seed)) == code


def test_distinguishes_nonisomorphic():
    p3 = path_graph(3)
    k3 = cycle_graph(3)
    assert canonical_code(p3) != canonical_code(k3)
    assert not are_isomorphic(p3, k3)
    assert are_isomorphic(p3, permuted(p3, 1))


def test_four_vertex_graph_count_is_eleven():
    codes = {
        canonical_code(graph_from_edges(4, es))
        for k in range(7)
        for es in combinations(list(combinations(range(4), 2)), k)
    }
    assert len(codes) == 11


def test_limit_is_enforced():
    with pytest.raises(CanonicalLimitError):
        canonical_code(wall(3), limit=16)
