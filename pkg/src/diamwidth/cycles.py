"""Anchored cycle enumeration and exact cycle packing.

A packing at a vertex anchor is a set of cycles through that vertex that
pairwise intersect in the anchor only; at an edge anchor the cycles all
traverse the edge and pairwise intersect exactly in its two endpoints.
These are precisely the host copies of the vertex-shared / edge-shared
cycle bouquets, so the packing decision doubles as the specialized
containment check for those patterns.

For instances where full enumeration is infeasible (dense hosts put
millions of anchored cycles through a clique) the solver first tries a
blocking-set bound: an exhaustive search that proves every quota-length
anchored cycle meets a vertex set B disjoint from the anchor shows that
any packing has at most |B| cycles, because packed cycles consume distinct
B vertices.  A bound below quota is an exact Absent.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, bit_indices
from .containment import ABSENT, BUDGET

DEFAULT_CYCLE_BUDGET = 2_000_000
ENUMERATION_CAP = 60_000


@dataclass(frozen=True)
class CyclePacking:
    anchor: tuple  # ("vertex", v) or ("edge", u, v)
    cycles: tuple[tuple[int, ...], ...]
    satisfied: bool


@dataclass(frozen=True)
class BlockingCertificate:
    """Every quota-length cycle through the anchor meets ``blockers``."""

    anchor: tuple
    blockers: frozenset[int]
    quota_total: int


def cycles_through_vertex(
    g: Graph,
    v: int,
    length: int,
    avoid: int = 0,
    limit: int | None = None,
    budget: int | None = DEFAULT_CYCLE_BUDGET,
):
    """Simple cycles of exactly ``length`` vertices through v, avoiding the
    ``avoid`` vertex mask.  Duplicates are removed by anchoring the cycle
    at v and orienting toward the smaller neighbour.

    Returns (cycles, exhausted) where exhausted is False iff a limit or
    budget stopped the enumeration early.
    """
    out: list[tuple[int, ...]] = []
    nodes = 0
    exhausted = True
    if (avoid >> v) & 1 or length < 3:
        return out, True
    blocked = avoid | (1 << v)
    path = [v]

    def dfs(last: int, used: int) -> bool:
        nonlocal nodes, exhausted
        if len(path) == length:
            if g.has_edge(last, v) and path[1] < path[-1]:
                out.append(tuple(path))
                if limit is not None and len(out) >= limit:
                    exhausted = False
                    return False
            return True
        for u in bit_indices(g.adj[last] & ~used & ~blocked):
            nodes += 1
            if budget is not None and nodes > budget:
                exhausted = False
                return False
            path.append(u)
            ok = dfs(u, used | (1 << u))
            path.pop()
            if not ok:
                return False
        return True

    dfs(v, 1 << v)
    return out, exhausted


def cycles_through_edge(
    g: Graph,
    u: int,
    v: int,
    length: int,
    avoid: int = 0,
    limit: int | None = None,
    budget: int | None = DEFAULT_CYCLE_BUDGET,
):
    """Simple cycles of exactly ``length`` vertices traversing edge uv."""
    if not g.has_edge(u, v):
        raise ValueError(f"anchor edge ({u},{v}) not present")
    out: list[tuple[int, ...]] = []
    nodes = 0
    exhausted = True
    if (avoid >> u) & 1 or (avoid >> v) & 1:
        return out, True
    a, b = (u, v) if u < v else (v, u)
    path = [a, b]

    def dfs(last: int, used: int) -> bool:
        nonlocal nodes, exhausted
        if len(path) == length:
            if g.has_edge(last, a):
                out.append(tuple(path))
                if limit is not None and len(out) >= limit:
                    exhausted = False
                    return False
            return True
        for w in bit_indices(g.adj[last] & ~used & ~avoid):
            nodes += 1
            if budget is not None and nodes > budget:
                exhausted = False
                return False
            path.append(w)
            ok = dfs(w, used | (1 << w))
            path.pop()
            if not ok:
                return False
        return True

    dfs(b, (1 << a) | (1 << b))
    return out, exhausted


def find_cycle_subgraph(g: Graph, length: int, budget: int | None = DEFAULT_CYCLE_BUDGET):
    """Any C_length subgraph of g, or None (exhaustive unless budget hit)."""
    for v in range(g.n):
        # cycles whose minimum vertex is v: avoid all smaller ids
        avoid = (1 << v) - 1
        cyc, exhausted = cycles_through_vertex(g, v, length, avoid, limit=1, budget=budget)
        if cyc:
            return cyc[0]
        if not exhausted:
            return BUDGET
    return None


def _anchored_cycles(g, anchor, length, avoid, limit, budget):
    if anchor[0] == "vertex":
        return cycles_through_vertex(g, anchor[1], length, avoid, limit, budget)
    return cycles_through_edge(g, anchor[1], anchor[2], length, avoid, limit, budget)


def _core_mask(anchor) -> int:
    if anchor[0] == "vertex":
        return 1 << anchor[1]
    return (1 << anchor[1]) | (1 << anchor[2])


def _find_one(g, anchor, lengths, avoid, budget):
    for length in sorted(set(lengths)):
        cyc, exhausted = _anchored_cycles(g, anchor, length, avoid, 1, budget)
        if cyc:
            return cyc[0]
        if not exhausted:
            return BUDGET
    return None


def _greedy_packing(g, anchor, quotas, budget):
    """Deterministic greedy disjoint packing; may satisfy the quota early."""
    core = _core_mask(anchor)
    used = 0
    picked: list[tuple[int, ...]] = []
    for length, count in sorted(quotas.items()):
        for _ in range(count):
            cyc, exhausted = _anchored_cycles(g, anchor, length, used, 1, budget)
            if not cyc:
                return picked, exhausted
            c = cyc[0]
            picked.append(c)
            for w in c:
                used |= 1 << w
            used &= ~core
    return picked, True


def _blocking_bound(g, anchor, lengths, budget):
    """The smallest greedy blocking set over a few pick strategies, or
    None.  Validity does not depend on the heuristic: the loop only ends
    when an exhaustive search finds no anchored cycle avoiding the set."""
    core = _core_mask(anchor)
    sample: list[tuple[int, ...]] = []
    for length in sorted(set(lengths)):
        got, _ = _anchored_cycles(g, anchor, length, 0, 400, budget)
        sample.extend(got)

    def freq_of(blockers: int) -> dict[int, int]:
        freq: dict[int, int] = {}
        for c in sample:
            if not any((blockers >> w) & 1 for w in c):
                for w in c:
                    if not (core >> w) & 1:
                        freq[w] = freq.get(w, 0) + 1
        return freq

    strategies = [
        lambda cyc, blockers: max(
            (w for w in cyc if not (core >> w) & 1),
            key=lambda w: (g.degree(w), -w),
        ),
        lambda cyc, blockers: max(
            (w for w in cyc if not (core >> w) & 1),
            key=lambda w: (freq_of(blockers).get(w, 0), g.degree(w), -w),
        ),
    ]
    best = None
    for pick_fn in strategies:
        blockers = 0
        for _ in range(g.n):
            cyc = _find_one(g, anchor, lengths, blockers, budget)
            if cyc is None:
                if best is None or blockers.bit_count() < best.bit_count():
                    best = blockers
                break
            if cyc is BUDGET:
                break
            blockers |= 1 << pick_fn(cyc, blockers)
    return best


def cycle_packing(
    g: Graph,
    anchor: tuple,
    quotas: dict[int, int],
    budget: int | None = DEFAULT_CYCLE_BUDGET,
):
    """Exact packing decision at an anchor.

    anchor: ("vertex", v) or ("edge", u, v).  quotas: cycle length ->
    required count (lengths >= 3).  Returns a satisfied CyclePacking, or
    ABSENT (exhaustive: greedy bound, blocking-set bound, or exhausted
    combination search), or BUDGET.
    """
    if any(l < 3 for l in quotas):
        raise ValueError("cycle lengths must be >= 3")
    total = sum(quotas.values())
    if total == 0:
        return CyclePacking(anchor, (), True)
    core = _core_mask(anchor)
    lengths = sorted(quotas)

    picked, greedy_exhaustive = _greedy_packing(g, anchor, quotas, budget)
    if len(picked) >= total:
        return CyclePacking(anchor, tuple(picked), True)
    if not greedy_exhaustive:
        return BUDGET

    # a single length's quota may already be infeasible on its own
    for length, need in quotas.items():
        blockers = _blocking_bound(g, anchor, [length], budget)
        if blockers is not None and blockers.bit_count() < need:
            return ABSENT
    if len(lengths) > 1:
        blockers = _blocking_bound(g, anchor, lengths, budget)
        if blockers is not None and blockers.bit_count() < total:
            return ABSENT

    # full enumeration + exact combination search
    pool: list[tuple[int, tuple[int, ...], int]] = []  # (length, cycle, mask)
    for length in lengths:
        cyc, exhausted = _anchored_cycles(g, anchor, length, 0, ENUMERATION_CAP, budget)
        if not exhausted:
            return BUDGET
        for c in cyc:
            mask = 0
            for w in c:
                mask |= 1 << w
            pool.append((length, c, mask & ~core))

    by_length = {l: [(c, m) for (lc, c, m) in pool if lc == l] for l in lengths}
    nodes = 0

    def search(li: int, need: int, start: int, used: int, acc: list):
        nonlocal nodes
        if need == 0:
            li += 1
            if li == len(lengths):
                return True
            return search(li, quotas[lengths[li]], 0, used, acc)
        cand = by_length[lengths[li]]
        for i in range(start, len(cand)):
            c, m = cand[i]
            if m & used:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                return "budget"
            acc.append(c)
            res = search(li, need - 1, i + 1, used | m, acc)
            if res is True:
                return True
            acc.pop()
            if res == "budget":
                return "budget"
        return False

    acc: list[tuple[int, ...]] = []
    res = search(0, quotas[lengths[0]], 0, 0, acc)
    if res is True:
        return CyclePacking(anchor, tuple(acc), True)
    if res == "budget":
        return BUDGET
    return ABSENT


def verify_packing(g: Graph, packing: CyclePacking, quotas: dict[int, int]) -> bool:
    core = _core_mask(packing.anchor)
    seen: dict[int, int] = {}
    masks = []
    for c in packing.cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            if not g.has_edge(a, b):
                return False
        if len(set(c)) != len(c):
            return False
        if packing.anchor[0] == "vertex":
            if packing.anchor[1] not in c:
                return False
        else:
            u, v = packing.anchor[1], packing.anchor[2]
            pairs = set(zip(c, c[1:] + c[:1]))
            if (u, v) not in pairs and (v, u) not in pairs:
                return False
        m = 0
        for w in c:
            m |= 1 << w
        masks.append(m & ~core)
        seen[len(c)] = seen.get(len(c), 0) + 1
    for m1, m2 in combinations(masks, 2):
        if m1 & m2:
            return False
    return all(seen.get(l, 0) >= k for l, k in quotas.items())


@dataclass(frozen=True)
class FreenessCertificate:
    free: bool
    mode: str  # "vertex" | "edge"
    lengths: tuple[int, ...]
    witness: CyclePacking | None  # the found copy when not free


def vtype_or_etype_free(
    g: Graph,
    lengths: list[int],
    mode: str,
    budget: int | None = DEFAULT_CYCLE_BUDGET,
):
    """Decide C^V / C^E subgraph-freeness by packing at every anchor.

    Returns a FreenessCertificate or BUDGET.  Equivalent to direct
    subgraph containment of the bouquet pattern.
    """
    if mode not in ("vertex", "edge"):
        raise ValueError("mode must be 'vertex' or 'edge'")
    quotas: dict[int, int] = {}
    for l in lengths:
        quotas[l] = quotas.get(l, 0) + 1
    anchors: list[tuple]
    if mode == "vertex":
        anchors = [("vertex", v) for v in range(g.n)]
    else:
        anchors = [("edge", u, v) for u, v in g.edges()]
    for anchor in anchors:
        res = cycle_packing(g, anchor, quotas, budget)
        if res is BUDGET:
            return BUDGET
        if isinstance(res, CyclePacking):
            return FreenessCertificate(False, mode, tuple(sorted(lengths)), res)
    return FreenessCertificate(True, mode, tuple(sorted(lengths)), None)
