"""Independent brute-force oracles used to pin expected values.

These deliberately re-derive everything from definitions (all elimination
forests / all orderings / all injective maps / all assignments) and share
no code path with the solvers they check.
"""

from __future__ import annotations

from itertools import combinations, permutations

from diamwidth.graphs import Graph, bit_indices, component_masks, graph_from_edges


def brute_treedepth(g: Graph) -> int:
    """Plain recursion over all elimination choices, no memo, no pruning."""

    def solve(mask: int) -> int:
        k = mask.bit_count()
        if k <= 1:
            return k
        comps = component_masks(g, mask)
        if len(comps) > 1:
            return max(solve(c) for c in comps)
        return 1 + min(solve(mask & ~(1 << v)) for v in bit_indices(mask))

    if g.n == 0:
        return 0
    return solve((1 << g.n) - 1)


def brute_pathwidth(g: Graph) -> int:
    """Minimum over every vertex ordering of the max boundary size."""
    n = g.n
    full = (1 << n) - 1
    best = n
    for order in permutations(range(n)):
        placed = 0
        worst = 0
        for v in order:
            placed |= 1 << v
            outside = full & ~placed
            cost = 0
            mm = placed
            while mm:
                low = mm & -mm
                mm ^= low
                if g.adj[low.bit_length() - 1] & outside:
                    cost += 1
            if cost > worst:
                worst = cost
                if worst >= best:
                    break
        if worst < best:
            best = worst
    return best


def brute_treewidth(g: Graph) -> int:
    """Minimum over every elimination ordering of the max fill-in clique."""
    n = g.n
    best = n - 1 if n else 0
    for order in permutations(range(n)):
        adj = list(g.adj)
        alive = (1 << n) - 1
        worst = 0
        for v in order:
            alive &= ~(1 << v)
            nb = adj[v] & alive
            c = nb.bit_count()
            if c > worst:
                worst = c
                if worst >= best:
                    break
            mm = nb
            while mm:
                low = mm & -mm
                mm ^= low
                adj[low.bit_length() - 1] |= nb & ~low
        if worst < best:
            best = worst
    return best


def brute_has_subgraph(host: Graph, pattern: Graph, induced: bool) -> bool:
    """Every injective map, checked directly."""
    hn, pn = host.n, pattern.n
    if pn > hn:
        return False
    for subset in permutations(range(hn), pn):
        ok = True
        for u in range(pn):
            for v in range(u + 1, pn):
                has = host.has_edge(subset[u], subset[v])
                if pattern.has_edge(u, v) and not has:
                    ok = False
                    break
                if induced and not pattern.has_edge(u, v) and has:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def brute_has_minor(host: Graph, pattern: Graph) -> bool:
    """Every assignment of host vertices to (branch set | unused)."""
    hn, pn = host.n, pattern.n
    if pn > hn:
        return False

    def ok(assign: list[int]) -> bool:
        masks = [0] * pn
        for v, a in enumerate(assign):
            if a >= 0:
                masks[a] |= 1 << v
        for k in range(pn):
            if masks[k] == 0 or len(component_masks(host, masks[k])) != 1:
                return False
        for u, v in pattern.edges():
            if not any(
                host.adj[a] & masks[v] for a in bit_indices(masks[u])
            ):
                return False
        return True

    def rec(v: int, assign: list[int]) -> bool:
        if v == hn:
            return ok(assign)
        for a in range(-1, pn):
            assign.append(a)
            if rec(v + 1, assign):
                return True
            assign.pop()
        return False

    return rec(0, [])


def brute_longest_induced_path_vertices(g: Graph) -> int:
    """Max size over all vertex subsets inducing a path."""
    from diamwidth.graphs import induced_subgraph, is_path_graph

    best = 1
    for k in range(2, g.n + 1):
        found = False
        for subset in combinations(range(g.n), k):
            sub, _ = induced_subgraph(g, list(subset))
            if is_path_graph(sub):
                found = True
                break
        if found:
            best = k
    return best


def brute_longest_path_vertices(g: Graph) -> int:
    """DFS over all simple paths."""
    best = 1

    def dfs(last: int, used: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        for u in bit_indices(g.adj[last] & ~used):
            dfs(u, used | (1 << u), size + 1)

    for s in range(g.n):
        dfs(s, 1 << s, 1)
    return best


def small_planar(g: Graph) -> bool:
    """Independent planarity for n <= 6: Kuratowski patterns directly.

    On at most 6 vertices: a K_{3,3} minor needs all 6 vertices, so it is
    a spanning subgraph; a K_5 minor is a K_5 subgraph or arises after one
    contraction.
    """
    from diamwidth.families import complete_bipartite, complete_graph

    if g.n <= 4:
        return True
    if g.n > 6:
        raise ValueError("small_planar handles n <= 6 only")
    k5 = complete_graph(5)
    if brute_has_subgraph(g, k5, induced=False):
        return False
    if g.n == 6:
        if brute_has_subgraph(g, complete_bipartite(3, 3), induced=False):
            return False
        for u, v in g.edges():
            merged = _contract(g, u, v)
            if brute_has_subgraph(merged, k5, induced=False):
                return False
    return True


def _contract(g: Graph, u: int, v: int) -> Graph:
    keep = [w for w in range(g.n) if w != v]
    index = {w: i for i, w in enumerate(keep)}
    edges = set()
    for a, b in g.edges():
        a2 = u if a == v else a
        b2 = u if b == v else b
        if a2 != b2:
            edges.add((index[a2], index[b2]))
    return graph_from_edges(len(keep), sorted(edges))
