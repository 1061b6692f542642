"""Immutable simple-graph value type and the elementary operations on it.

Vertices are dense integers ``0..n-1``.  Adjacency is stored as one Python
int bitmask per vertex, which keeps the exhaustive searches used throughout
the package fast without third-party dependencies.  Graph values never
mutate; every operation returns a new value.

Vertices may carry short text labels ("apex", "p:3", "Z:x:0,1", ...).
Constructions use them to make gadget roles addressable; labels never
influence adjacency-level semantics such as isomorphism or containment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping

INFINITE = math.inf


def bit_indices(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertex ids ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask.  Invariants
    (checked on construction): no self-loops, symmetric adjacency, all
    bits below ``n``.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[tuple[int, str], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("negative vertex count")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"vertex {v} adjacent to out-of-range id")
            if (mask >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, mask in enumerate(self.adj):
            rest = mask
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                rest ^= low
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric edge {v}->{u}")
        for v, _lab in self.labels:
            if not 0 <= v < self.n:
                raise ValueError(f"label on out-of-range vertex {v}")

    # -- basic accessors -------------------------------------------------

    @cached_property
    def m(self) -> int:
        """Number of edges."""
        return sum(mask.bit_count() for mask in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(mask.bit_count() for mask in self.adj)

    def neighbors(self, v: int) -> Iterator[int]:
        return bit_indices(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            rest = self.adj[v] >> (v + 1)
            base = v + 1
            while rest:
                low = rest & -rest
                yield v, base + low.bit_length() - 1
                rest ^= low

    @cached_property
    def label_map(self) -> dict[int, str]:
        return dict(self.labels)

    def find_label(self, text: str) -> int:
        """Return the id carrying label ``text`` (it must be unique)."""
        hits = [v for v, lab in self.labels if lab == text]
        if len(hits) != 1:
            raise KeyError(f"label {text!r} found {len(hits)} times")
        return hits[0]

    def with_labels(self, labels: Mapping[int, str]) -> "Graph":
        return Graph(self.n, self.adj, tuple(sorted(labels.items())))

    def __repr__(self) -> str:  # keep test failures readable
        return f"Graph(n={self.n}, m={self.m})"


def graph_from_edges(
    n: int,
    edges: Iterable[tuple[int, int]],
    labels: Mapping[int, str] | None = None,
) -> Graph:
    """Build a Graph from an edge list; duplicate edges are merged."""
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    lab = tuple(sorted(labels.items())) if labels else ()
    return Graph(n, tuple(adj), lab)


def edgeless_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


# -- connectivity and distances -----------------------------------------


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Vertex-set bitmasks of the connected components (of ``within``)."""
    todo = within if within is not None else (1 << g.n) - 1
    comps = []
    while todo:
        seed = todo & -todo
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in bit_indices(frontier):
                grow |= g.adj[v]
            grow &= todo & ~comp
            comp |= grow
            frontier = grow
        comps.append(comp)
        todo &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return len(component_masks(g)) == 1


def distances_from(g: Graph, source: int) -> list[int | float]:
    """Hop distances from ``source``; unreachable vertices get INFINITE."""
    dist: list[int | float] = [INFINITE] * g.n
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        for v in bit_indices(frontier):
            dist[v] = d
        grow = 0
        for v in bit_indices(frontier):
            grow |= g.adj[v]
        frontier = grow & ~seen
        seen |= frontier
        d += 1
    return dist


@dataclass(frozen=True)
class DistanceTable:
    """All-pairs hop distances, rows indexed by source vertex."""

    rows: tuple[tuple[int | float, ...], ...]

    def d(self, u: int, v: int) -> int | float:
        return self.rows[u][v]


def distance_table(g: Graph) -> DistanceTable:
    return DistanceTable(tuple(tuple(distances_from(g, v)) for v in range(g.n)))


def eccentricity(g: Graph, v: int) -> int | float:
    return max(distances_from(g, v))


def diameter(g: Graph) -> int | float:
    """Max pairwise distance; INFINITE when disconnected; error on empty."""
    if g.n == 0:
        raise ValueError("diameter of the empty graph is undefined")
    if g.n == 1:
        return 0
    best: int | float = 0
    for v in range(g.n):
        ecc = eccentricity(g, v)
        if ecc == INFINITE:
            return INFINITE
        if ecc > best:
            best = ecc
    return best


# -- composition operations ----------------------------------------------


def disjoint_union(g: Graph, h: Graph) -> Graph:
    adj = list(g.adj) + [mask << g.n for mask in h.adj]
    labels = dict(g.labels)
    labels.update({v + g.n: lab for v, lab in h.labels})
    return Graph(g.n + h.n, tuple(adj), tuple(sorted(labels.items())))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus all edges between the two sides."""
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    adj = [mask | hmask for mask in g.adj]
    adj += [(mask << g.n) | gmask for mask in h.adj]
    labels = dict(g.labels)
    labels.update({v + g.n: lab for v, lab in h.labels})
    return Graph(g.n + h.n, tuple(adj), tuple(sorted(labels.items())))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    adj = tuple((full & ~mask) & ~(1 << v) for v, mask in enumerate(g.adj))
    return Graph(g.n, adj, g.labels)


def subdivide(g: Graph, k: int) -> Graph:
    """Replace every edge by a path with ``k`` internal vertices.

    Original ids (and labels) are preserved; internal vertices are appended
    in sorted-edge order and labelled ``sub:u-v:t``.
    """
    if k < 0:
        raise ValueError("subdivision count must be >= 0")
    if k == 0:
        return g
    edges = list(g.edges())
    n = g.n + k * len(edges)
    out = []
    labels = dict(g.labels)
    nxt = g.n
    for u, v in edges:
        chain = [u] + list(range(nxt, nxt + k)) + [v]
        for t, w in enumerate(chain[1:-1]):
            labels[w] = f"sub:{u}-{v}:{t}"
        for a, b in zip(chain, chain[1:]):
            out.append((a, b))
        nxt += k
    return graph_from_edges(n, out, labels)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices`` (relabelled densely).

    Returns the new graph and the list mapping new ids to old ids.
    """
    keep = sorted(set(vertices))
    index = {old: new for new, old in enumerate(keep)}
    edges = [
        (index[u], index[v])
        for u in keep
        for v in bit_indices(g.adj[u])
        if v in index and u < v
    ]
    labels = {index[v]: lab for v, lab in g.labels if v in index}
    return graph_from_edges(len(keep), edges, labels), keep


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, [u for u in range(g.n) if u != v])[0]


# -- structural predicates -----------------------------------------------


def bipartition(g: Graph) -> tuple[int, int] | None:
    """(mask0, mask1) of a proper 2-colouring, or None if non-bipartite.

    Colour 0 is the class containing the smallest vertex of each component.
    """
    color = [-1] * g.n
    m0 = m1 = 0
    for comp in component_masks(g):
        seed = (comp & -comp).bit_length() - 1
        color[seed] = 0
        frontier = [seed]
        while frontier:
            nxt = []
            for v in frontier:
                for u in bit_indices(g.adj[v]):
                    if color[u] == -1:
                        color[u] = 1 - color[v]
                        nxt.append(u)
                    elif color[u] == color[v]:
                        return None
            frontier = nxt
    for v, c in enumerate(color):
        if c == 0:
            m0 |= 1 << v
        elif c == 1:
            m1 |= 1 << v
    return m0, m1


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, INFINITE for forests."""
    best: int | float = INFINITE
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                for u in bit_indices(g.adj[v]):
                    if dist[u] == -1:
                        dist[u] = dist[v] + 1
                        parent[u] = v
                        nxt.append(u)
                    elif u != parent[v] and dist[u] >= dist[v]:
                        cyc = dist[u] + dist[v] + 1
                        if cyc < best:
                            best = cyc
            frontier = nxt
    return best


def cyclomatic_number(g: Graph) -> int:
    """Number of independent cycles: m - n + #components."""
    return g.m - g.n + len(component_masks(g))


def is_forest(g: Graph) -> bool:
    return cyclomatic_number(g) == 0


def is_path_graph(g: Graph) -> bool:
    """True iff g is a (possibly single-vertex) path."""
    if g.n == 0:
        return False
    if g.n == 1:
        return True
    degs = sorted(g.degrees)
    return (
        is_connected(g)
        and g.m == g.n - 1
        and degs[0] == 1
        and degs[-1] <= 2
    )


def is_linear_forest(g: Graph) -> bool:
    return all(
        is_path_graph(induced_subgraph(g, list(bit_indices(c)))[0])
        for c in component_masks(g)
    )
