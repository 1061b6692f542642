"""Exact pattern containment: subgraph, induced subgraph, minor.

All searches are three-valued: an ``Embedding`` when found, ``ABSENT``
only after exhaustive search, ``BUDGET`` when the node budget ran out.
Budget results are never silently coerced to absence.

The subgraph matcher is a backtracking search over candidate bitmasks with
degree and adjacency-consistency pruning; pattern vertices are ordered by
descending degree with connectivity preference, host candidates ascending.
The contract is exactness, not any particular search order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bit_indices, component_masks
from .paths import PathWitness, find_induced_path


class _Marker:
    def __init__(self, name: str):
        self._name = name

    def __repr__(self) -> str:
        return self._name


ABSENT = _Marker("ABSENT")
BUDGET = _Marker("BUDGET")

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class Embedding:
    """Injective map of pattern ids into the host.

    ``vertex_map[i]`` is the host image of pattern vertex i for subgraph
    and induced modes; minor mode instead maps each pattern vertex to a
    connected host branch set (``branch_sets``).
    """

    mode: str  # "subgraph" | "induced" | "minor"
    vertex_map: tuple[int, ...] = ()
    branch_sets: tuple[frozenset[int], ...] = ()


def verify_embedding(host: Graph, pattern: Graph, emb: Embedding) -> bool:
    if emb.mode in ("subgraph", "induced"):
        vm = emb.vertex_map
        if len(vm) != pattern.n or len(set(vm)) != pattern.n:
            return False
        for u, v in pattern.edges():
            if not host.has_edge(vm[u], vm[v]):
                return False
        if emb.mode == "induced":
            for u in range(pattern.n):
                for v in range(u + 1, pattern.n):
                    if not pattern.has_edge(u, v) and host.has_edge(vm[u], vm[v]):
                        return False
        return True
    if emb.mode == "minor":
        sets = emb.branch_sets
        if len(sets) != pattern.n:
            return False
        seen: set[int] = set()
        for bs in sets:
            if not bs or seen & bs:
                return False
            seen |= bs
            mask = 0
            for v in bs:
                mask |= 1 << v
            if len(component_masks(host, mask)) != 1:
                return False
        for u, v in pattern.edges():
            if not any(host.has_edge(a, b) for a in sets[u] for b in sets[v]):
                return False
        return True
    return False


def _pattern_order(pattern: Graph) -> list[int]:
    order: list[int] = []
    placed = 0
    while len(order) < pattern.n:
        best = None
        key = None
        for v in range(pattern.n):
            if (placed >> v) & 1:
                continue
            anchored = (pattern.adj[v] & placed).bit_count()
            k = (anchored, pattern.degree(v), -v)
            if key is None or k > key:
                key = k
                best = v
        order.append(best)
        placed |= 1 << best
    return order


def _match(host: Graph, pattern: Graph, induced: bool, budget: int | None):
    if pattern.n == 0:
        return Embedding("induced" if induced else "subgraph")
    if pattern.n > host.n or pattern.m > host.m:
        return ABSENT
    order = _pattern_order(pattern)
    mode = "induced" if induced else "subgraph"
    hdeg = host.degrees
    pdeg = pattern.degrees
    full = (1 << host.n) - 1
    base_cand = []
    for p in order:
        mask = 0
        for v in range(host.n):
            if hdeg[v] >= pdeg[p]:
                mask |= 1 << v
        base_cand.append(mask)
    # earlier-neighbour constraints per position
    nbr_pos: list[list[tuple[int, bool]]] = []
    for k, p in enumerate(order):
        cons = []
        for k2 in range(k):
            q = order[k2]
            if pattern.has_edge(p, q):
                cons.append((k2, True))
            elif induced:
                cons.append((k2, False))
        nbr_pos.append(cons)

    images = [0] * pattern.n
    used = 0
    nodes = 0
    k = 0
    cand_stack: list[int] = [0] * pattern.n

    def candidates(k: int) -> int:
        cand = base_cand[k] & ~used
        for k2, adjacent in nbr_pos[k]:
            img = images[k2]
            if adjacent:
                cand &= host.adj[img]
            else:
                cand &= full & ~host.adj[img] & ~(1 << img)
        return cand

    cand_stack[0] = candidates(0)
    while True:
        cand = cand_stack[k]
        if cand == 0:
            if k == 0:
                return ABSENT
            k -= 1
            used &= ~(1 << images[k])
            continue
        low = cand & -cand
        cand_stack[k] = cand ^ low
        v = low.bit_length() - 1
        nodes += 1
        if budget is not None and nodes > budget:
            return BUDGET
        images[k] = v
        if k + 1 == pattern.n:
            vm = [0] * pattern.n
            for pos, p in enumerate(order):
                vm[p] = images[pos]
            return Embedding(mode, tuple(vm))
        used |= 1 << v
        k += 1
        cand_stack[k] = candidates(k)


def has_subgraph(host: Graph, pattern: Graph, budget: int | None = DEFAULT_BUDGET):
    """Embedding iff pattern is a subgraph of host; ABSENT is exhaustive."""
    return _match(host, pattern, False, budget)


def has_induced_subgraph(host: Graph, pattern: Graph, budget: int | None = DEFAULT_BUDGET):
    return _match(host, pattern, True, budget)


# -- minors ------------------------------------------------------------------


def has_minor(host: Graph, pattern: Graph, budget: int | None = DEFAULT_BUDGET):
    """Branch-set search for a pattern minor; ABSENT only after exhaustion.

    Every model is found through its minimal form: each branch set is the
    union of its seed and of connecting paths grown to satisfy pattern
    edges, so enumerating seeds plus simple connecting paths is complete.
    """
    if pattern.n == 0:
        return Embedding("minor")
    if pattern.n > host.n or pattern.m > host.m:
        return ABSENT
    order = _pattern_order(pattern)
    nodes = 0

    assign = [-1] * host.n  # host vertex -> position in order, or -1
    sets: list[set[int]] = [set() for _ in range(pattern.n)]

    def over() -> bool:
        nonlocal nodes
        nodes += 1
        return budget is not None and nodes > budget

    # The search keeps every alternative alive through continuations:
    # satisfy(..., cont) succeeds only if some connector makes cont()
    # succeed, so a downstream dead end backtracks into other connectors.
    # Connector paths between two branch sets may be split at any point,
    # the prefix joining one set and the suffix the other; this is what
    # lets earlier branch sets keep growing (e.g. the spoke contractions
    # of a Petersen K_5 model).

    def place(k: int):
        if k == pattern.n:
            return True
        p = order[k]
        needed = [k2 for k2 in range(k) if pattern.has_edge(p, order[k2])]
        for seed in range(host.n):
            if assign[seed] != -1:
                continue
            if over():
                return "budget"
            assign[seed] = k
            sets[k] = {seed}
            res = satisfy(k, needed, 0, lambda: place(k + 1))
            if res is True:
                return True
            for v in list(sets[k]):
                assign[v] = -1
            sets[k] = set()
            if res == "budget":
                return "budget"
        return False

    def satisfy(k: int, needed: list[int], idx: int, cont):
        if idx == len(needed):
            return cont()
        k2 = needed[idx]
        if any(host.has_edge(a, b) for a in sets[k] for b in sets[k2]):
            return satisfy(k, needed, idx + 1, cont)
        starts = sorted(
            {v for a in sets[k] for v in bit_indices(host.adj[a]) if assign[v] == -1}
        )
        return extend(k, k2, needed, idx, [], starts, cont)

    def apply_split(k, k2, needed, idx, path, s, cont):
        for v in path[:s]:
            assign[v] = k
            sets[k].add(v)
        for v in path[s:]:
            assign[v] = k2
            sets[k2].add(v)
        res = satisfy(k, needed, idx + 1, cont)
        if res is True:
            return True
        for v in path[:s]:
            sets[k].discard(v)
            assign[v] = -1
        for v in path[s:]:
            sets[k2].discard(v)
            assign[v] = -1
        return res

    def extend(k, k2, needed, idx, path, frontier, cont):
        for v in frontier:
            if assign[v] != -1 or v in path:
                continue
            if over():
                return "budget"
            path.append(v)
            if any(host.has_edge(v, b) for b in sets[k2]):
                for s in range(len(path) + 1):
                    res = apply_split(k, k2, needed, idx, path, s, cont)
                    if res is True or res == "budget":
                        return res
            nxt = sorted(
                u
                for u in bit_indices(host.adj[v])
                if assign[u] == -1 and u not in path
            )
            res = extend(k, k2, needed, idx, path, nxt, cont)
            path.pop()
            if res is True or res == "budget":
                return res
        return False

    res = place(0)
    if res == "budget":
        return BUDGET
    if res is True:
        branch = [frozenset()] * pattern.n
        for pos, p in enumerate(order):
            branch[p] = frozenset(sets[pos])
        return Embedding("minor", branch_sets=tuple(branch))
    return ABSENT


# -- the biclique-or-induced-path dichotomy witness --------------------------


@dataclass(frozen=True)
class GrsWitness:
    """Either a K_{r,s} subgraph embedding, an induced path on l vertices,
    proof that an exhaustive search found neither, or a budget overrun."""

    kind: str  # "biclique" | "induced_path" | "exhausted" | "budget"
    embedding: Embedding | None = None
    path: PathWitness | None = None


def find_biclique(host: Graph, r: int, s: int, budget: int | None = DEFAULT_BUDGET):
    """K_{r,s} subgraph via common-neighbourhood enumeration."""
    from itertools import combinations

    if r > s:
        r, s = s, r
    cands = [v for v in range(host.n) if host.degree(v) >= r]
    nodes = 0
    for left in combinations(sorted(cands), r):
        nodes += 1
        if budget is not None and nodes > budget:
            return BUDGET
        common = (1 << host.n) - 1
        for v in left:
            common &= host.adj[v]
        common &= ~sum(1 << v for v in left)
        if common.bit_count() >= s:
            right = []
            for u in bit_indices(common):
                right.append(u)
                if len(right) == s:
                    break
            return Embedding("subgraph", tuple(left) + tuple(right))
    return ABSENT


def grs_witness(g: Graph, r: int, s: int, l: int, budget: int | None = DEFAULT_BUDGET) -> GrsWitness:
    """Biclique K_{r,s} if present, else an induced P_l, else exhaustion."""
    emb = find_biclique(g, r, s, budget)
    if isinstance(emb, Embedding):
        return GrsWitness("biclique", embedding=emb)
    path, path_exhausted = find_induced_path(g, l, budget)
    if path is not None:
        return GrsWitness("induced_path", path=path)
    if emb is ABSENT and path_exhausted:
        return GrsWitness("exhausted")
    return GrsWitness("budget")
