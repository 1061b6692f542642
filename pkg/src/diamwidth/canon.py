"""Canonical forms for small graphs.

``canonical_code`` returns a byte string equal for two graphs iff they are
isomorphic.  The form is the lexicographically smallest upper-triangle
adjacency encoding over the orderings produced by iterated degree
refinement with individualization, prefixed by (n, m, degree histogram) so
that inequivalent graphs usually differ in the first bytes.  Deterministic
across runs and platforms; intended for desk-scale isomorph rejection
(census enumeration), not for large or highly symmetric graphs.
"""

from __future__ import annotations

from .graphs import Graph

DEFAULT_CANON_LIMIT = 16


class CanonicalLimitError(ValueError):
    pass


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Stable iterated refinement by neighbour counts per cell."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {}
            for v in cell:
                key = tuple((adj[v] & m).bit_count() for m in masks)
                sig.setdefault(key, []).append(v)
            if len(sig) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for key in sorted(sig):
                    new_cells.append(sig[key])
        cells = new_cells
        if not changed:
            return cells


def _code_for_order(adj: tuple[int, ...], order: list[int]) -> bytes:
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    bits = bytearray()
    acc = 0
    k = 0
    for j in range(1, n):
        vj = order[j]
        row = adj[vj]
        for i in range(j):
            acc = (acc << 1) | ((row >> order[i]) & 1)
            k += 1
            if k == 8:
                bits.append(acc)
                acc = k = 0
    if k:
        bits.append(acc << (8 - k))
    return bytes(bits)


def canonical_code(g: Graph, limit: int = DEFAULT_CANON_LIMIT) -> bytes:
    if g.n > limit:
        raise CanonicalLimitError(
            f"canonical form limited to {limit} vertices, got {g.n}"
        )
    degs = sorted(g.degrees)
    prefix = bytes([g.n]) + g.m.to_bytes(2, "big") + bytes(degs)
    if g.n <= 1:
        return prefix
    # Initial partition: degree classes, ascending.
    by_deg: dict[int, list[int]] = {}
    for v in range(g.n):
        by_deg.setdefault(g.degree(v), []).append(v)
    start = [by_deg[d] for d in sorted(by_deg)]
    best: list[bytes | None] = [None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(g.adj, cells)
        target = None
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                target = i
                break
        if target is None:
            code = _code_for_order(g.adj, [c[0] for c in cells])
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        cell = cells[target]
        for v in cell:
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1 :])

    search(start)
    assert best[0] is not None
    return prefix + best[0]


def are_isomorphic(g: Graph, h: Graph, limit: int = DEFAULT_CANON_LIMIT) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_code(g, limit) == canonical_code(h, limit)
