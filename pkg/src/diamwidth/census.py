"""Small-graph census: enumerate connected graphs up to isomorphism,
filter by diameter and forbidden-pattern freeness, record extremal widths.

Enumeration is vertex augmentation: every connected graph on n vertices
arises from a connected graph on n-1 by adding one vertex with a nonempty
neighbourhood (every connected graph has a non-cut vertex), deduplicated
by canonical code.  The unfiltered counts 1, 1, 2, 6, 21, 112 for
n = 1..6 anchor correctness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_code
from .containment import ABSENT, BUDGET, has_induced_subgraph, has_minor, has_subgraph
from .formats import to_graph6
from .graphs import INFINITE, Graph, diameter, graph_from_edges
from .width import treedepth_exact, pathwidth_exact, treewidth_exact

CENSUS_LIMIT = 9


def enumerate_connected_graphs(n_max: int) -> list[list[Graph]]:
    """levels[n] = connected graphs on n vertices up to isomorphism,
    in canonical-code order (levels[0] is empty)."""
    if n_max > CENSUS_LIMIT:
        raise ValueError(f"census enumeration limited to {CENSUS_LIMIT} vertices")
    levels: list[list[Graph]] = [[], [graph_from_edges(1, [])]]
    for n in range(2, n_max + 1):
        seen: dict[bytes, Graph] = {}
        for base in levels[n - 1]:
            edges = list(base.edges())
            for nbhd in range(1, 1 << (n - 1)):
                extra = [
                    (n - 1, v) for v in range(n - 1) if (nbhd >> v) & 1
                ]
                g = graph_from_edges(n, edges + extra)
                code = canonical_code(g)
                if code not in seen:
                    seen[code] = g
        levels.append([seen[c] for c in sorted(seen)])
    return levels


def connected_graph_counts(n_max: int) -> list[int]:
    return [len(level) for level in enumerate_connected_graphs(n_max)[1:]]


def enumerate_all_graphs(n_max: int) -> list[list[Graph]]:
    """All graphs (connected or not) up to isomorphism, per order."""
    if n_max > CENSUS_LIMIT:
        raise ValueError(f"census enumeration limited to {CENSUS_LIMIT} vertices")
    levels: list[list[Graph]] = [[], [graph_from_edges(1, [])]]
    for n in range(2, n_max + 1):
        seen: dict[bytes, Graph] = {}
        for base in levels[n - 1]:
            edges = list(base.edges())
            for nbhd in range(1 << (n - 1)):
                extra = [(n - 1, v) for v in range(n - 1) if (nbhd >> v) & 1]
                g = graph_from_edges(n, edges + extra)
                code = canonical_code(g)
                if code not in seen:
                    seen[code] = g
        levels.append([seen[c] for c in sorted(seen)])
    return levels


@dataclass(frozen=True)
class CensusRow:
    n: int
    count: int
    max_width: int | None
    witness_graph6: str | None


_CHECKERS = {
    "subgraph": has_subgraph,
    "induced": has_induced_subgraph,
    "minor": has_minor,
}

_SOLVERS = {
    "td": treedepth_exact,
    "pw": pathwidth_exact,
    "tw": treewidth_exact,
}


def is_pattern_free(g: Graph, forbidden: Graph, relation: str, budget=None) -> bool:
    res = _CHECKERS[relation](g, forbidden, budget)
    if res is BUDGET:
        raise RuntimeError("budget exhausted during census freeness check")
    return res is ABSENT


def census(
    n_max: int,
    forbidden: Graph,
    relation: str,
    d: int | float,
    parameter: str,
) -> list[CensusRow]:
    """One row per order n <= n_max over connected graphs of diameter <= d
    that avoid ``forbidden`` under ``relation``: count, max exact width,
    and a graph6 witness attaining it."""
    if relation not in _CHECKERS:
        raise ValueError(f"unknown relation {relation!r}")
    if parameter not in _SOLVERS:
        raise ValueError(f"unknown parameter {parameter!r}")
    solver = _SOLVERS[parameter]
    rows = []
    levels = enumerate_connected_graphs(n_max)
    for n in range(1, n_max + 1):
        count = 0
        best: int | None = None
        witness: Graph | None = None
        for g in levels[n]:
            dia = diameter(g)
            if dia == INFINITE or dia > d:
                continue
            if not is_pattern_free(g, forbidden, relation):
                continue
            count += 1
            value = solver(g).value
            if best is None or value > best:
                best = value
                witness = g
        rows.append(
            CensusRow(n, count, best, to_graph6(witness) if witness else None)
        )
    return rows


def census_to_csv(rows: list[CensusRow]) -> str:
    lines = ["n,count,max_width,witness_graph6"]
    for r in rows:
        lines.append(
            f"{r.n},{r.count},"
            f"{'' if r.max_width is None else r.max_width},"
            f"{r.witness_graph6 or ''}"
        )
    return "\n".join(lines) + "\n"
