"""The 60-query classification regression catalog.

Each row: (label, forbidden graph factory, relation, parameter, d,
expected answer, expected lead citation or None, rule id that must appear
in the fired set or None, substring the Open note must contain or None).

The expected verdicts restate the classification results the oracle
encodes; rows where several results legitimately decide the same query
assert membership in the fired set instead of the lead citation.
"""

from __future__ import annotations

import math

from diamwidth.families import (
    complete_bipartite,
    complete_graph,
    cycle_bouquet,
    cycle_graph,
    h_graph,
    path_graph,
    patterned_apex_path,
    spider,
    wall,
)
from diamwidth.graphs import disjoint_union, edgeless_graph, graph_from_edges

INF = math.inf


def _two_tailed_c6():
    # C_6 with pendants on opposite cycle vertices: unicyclic, bipartite,
    # C4-free, but not an apex linear forest
    g = cycle_graph(6)
    return graph_from_edges(
        8, list(g.edges()) + [(0, 6), (3, 7)]
    )


def _claw():
    return spider([1, 1, 1])


CATALOG = [
    # --- d = 1 degenerate cases -------------------------------------------
    ("K5 sub td d1", lambda: complete_graph(5), "subgraph", "td", 1,
     "Bounded", "d1-finiteness", None, None),
    ("C4 minor cw d1", lambda: [cycle_graph(4)], "minor", "cw", 1,
     "Bounded", "d1-finiteness", None, None),
    ("K3 induced td d1", lambda: complete_graph(3), "induced", "td", 1,
     "Bounded", "induced-widths-dichotomy", None, None),
    ("P3 induced tw d1", lambda: path_graph(3), "induced", "tw", 1,
     "Unbounded", "induced-widths-dichotomy", None, None),
    # --- induced relation ---------------------------------------------------
    ("K1 induced td d2", lambda: path_graph(1), "induced", "td", 2,
     "Bounded", "induced-widths-dichotomy", None, None),
    ("K2 induced tw d5", lambda: path_graph(2), "induced", "tw", 5,
     "Bounded", "induced-widths-dichotomy", None, None),
    ("P3 induced td d2", lambda: path_graph(3), "induced", "td", 2,
     "Unbounded", "induced-widths-dichotomy", None, None),
    ("P4 induced cw d2", lambda: path_graph(4), "induced", "cw", 2,
     "Bounded", "induced-cw-dichotomy", None, None),
    ("P5 induced cw d2", lambda: path_graph(5), "induced", "cw", 2,
     "Unbounded", "induced-cw-dichotomy", None, None),
    ("C4 induced cw d3", lambda: cycle_graph(4), "induced", "cw", 3,
     "Unbounded", "induced-cw-dichotomy", None, None),
    ("2K1 induced cw d2", lambda: edgeless_graph(2), "induced", "cw", 2,
     "Bounded", "induced-cw-dichotomy", None, None),
    # --- minor relation -------------------------------------------------------
    ("apex-P3 minor td d2", lambda: [patterned_apex_path(3, "1")], "minor", "td", 2,
     "Bounded", "minor-diam-td", None, None),
    ("K33 minor td d2", lambda: [complete_bipartite(3, 3)], "minor", "td", 2,
     "Unbounded", "minor-diam-td", None, None),
    ("claw minor pw d3", lambda: [_claw()], "minor", "pw", 3,
     "Bounded", "minor-diam-pw", None, None),
    ("wall2 minor pw d2", lambda: [wall(2)], "minor", "pw", 2,
     "Unbounded", "minor-diam-pw", None, None),
    ("K5 minor cw d2", lambda: [complete_graph(5)], "minor", "cw", 2,
     "Bounded", "minor-diam-tw-cw", None, None),
    ("K7 minor tw d2", lambda: [complete_graph(7)], "minor", "tw", 2,
     "Unbounded", "minor-diam-tw-cw", None, None),
    ("K5 minor tw dinf", lambda: [complete_graph(5)], "minor", "tw", INF,
     "Unbounded", "minor-nodiam-tw", None, None),
    ("wall2 minor cw dinf", lambda: [wall(2)], "minor", "cw", INF,
     "Bounded", "minor-nodiam-cw", None, None),
    ("P5 minor td dinf", lambda: [path_graph(5)], "minor", "td", INF,
     "Bounded", "minor-nodiam-td", None, None),
    # --- subgraph relation, treedepth, no diameter bound ----------------------
    ("P9 sub td dinf", lambda: path_graph(9), "subgraph", "td", INF,
     "Bounded", "subgraph-nodiam-td", None, None),
    ("claw sub td dinf", lambda: _claw(), "subgraph", "td", INF,
     "Unbounded", "subgraph-nodiam-td", None, None),
    ("P3+P7 sub td dinf", lambda: disjoint_union(path_graph(3), path_graph(7)),
     "subgraph", "td", INF, "Bounded", "subgraph-nodiam-td", None, None),
    # --- subgraph treedepth at d >= 4 ----------------------------------------
    ("claw sub td d5", lambda: _claw(), "subgraph", "td", 5,
     "Bounded", "classification-d5", None, None),
    ("spider222 sub td d7", lambda: spider([2, 2, 2]), "subgraph", "td", 7,
     "Bounded", "classification-d5", None, None),
    ("H2 sub td d5", lambda: h_graph(2, 1), "subgraph", "td", 5,
     "Unbounded", "classification-d5", None, None),
    ("H2^3 sub td d4", lambda: h_graph(2, 3), "subgraph", "td", 4,
     "Bounded", "hgraph-bounded-d4", None, None),
    ("H2^3 sub td d5", lambda: h_graph(2, 3), "subgraph", "td", 5,
     "Unbounded", "classification-d5", None, None),
    ("H3 sub td d4", lambda: h_graph(3, 1), "subgraph", "td", 4,
     "Unbounded", None, "sub-td-d4-unbounded", None),
    # --- subgraph treedepth at d in {2, 3} -----------------------------------
    ("C6 sub td d2", lambda: cycle_graph(6), "subgraph", "td", 2,
     "Bounded", "unicyclic-d2", None, None),
    ("C6 sub td d3", lambda: cycle_graph(6), "subgraph", "td", 3,
     "Unbounded", "gq-polarity-c6-d3", None, None),
    ("C8 sub td d2", lambda: cycle_graph(8), "subgraph", "td", 2,
     "Bounded", "unicyclic-d2", None, None),
    ("C8 sub td d3", lambda: cycle_graph(8), "subgraph", "td", 3,
     "Bounded", "c8-bounded-d3", None, None),
    ("C4 sub td d2", lambda: cycle_graph(4), "subgraph", "td", 2,
     "Unbounded", "er-polarity-c4-d2", None, None),
    ("C10 sub td d3", lambda: cycle_graph(10), "subgraph", "td", 3,
     "Bounded", "even-cycle-d3-computer", None, "computer"),
    ("C30 sub td d3", lambda: cycle_graph(30), "subgraph", "td", 3,
     "Open", None, None, "conjecture-even-cycles-d3"),
    ("C5 sub td d2", lambda: cycle_graph(5), "subgraph", "td", 2,
     "Unbounded", "canonical-unbounded-pairs", None, None),
    ("K3 sub td d2", lambda: complete_graph(3), "subgraph", "td", 2,
     "Unbounded", "canonical-unbounded-pairs", None, None),
    ("H1 sub td d3", lambda: h_graph(1, 1), "subgraph", "td", 3,
     "Bounded", "tree-alf-d3", None, None),
    ("H3 sub td d2", lambda: h_graph(3, 1), "subgraph", "td", 2,
     "Unbounded", "canonical-unbounded-pairs", "sub-td-not-alf", None),
    ("star4 sub td d3", lambda: spider([1, 1, 1, 1]), "subgraph", "td", 3,
     "Bounded", "spider-bounded", None, None),
    ("two-tailed C6 sub td d2", _two_tailed_c6, "subgraph", "td", 2,
     "Unbounded", "canonical-unbounded-pairs", "sub-td-not-alf", None),
    ("CV66 sub td d2", lambda: cycle_bouquet([6, 6], "vertex"), "subgraph", "td", 2,
     "Bounded", "cv-two-lengths-d2", None, None),
    ("CV68 sub td d2", lambda: cycle_bouquet([6, 8], "vertex"), "subgraph", "td", 2,
     "Bounded", "cv-two-lengths-d2", None, None),
    ("CV666 sub td d2", lambda: cycle_bouquet([6, 6, 6], "vertex"), "subgraph", "td", 2,
     "Bounded", "cv-uniform-d2", None, None),
    ("CV88 sub td d3", lambda: cycle_bouquet([8, 8], "vertex"), "subgraph", "td", 3,
     "Unbounded", "samecyc-unbounded-d3", None, None),
    ("CV12-16 sub td d3", lambda: cycle_bouquet([12, 16], "vertex"), "subgraph", "td", 3,
     "Unbounded", "samecyc-unbounded-d3", None, None),
    ("CE66 sub td d2", lambda: cycle_bouquet([6, 6], "edge"), "subgraph", "td", 2,
     "Bounded", "ce-two-lengths-d2", None, None),
    ("CE6x6 sub td d2", lambda: cycle_bouquet([6] * 6, "edge"), "subgraph", "td", 2,
     "Unbounded", None, "sub-td-ce-uniform", None),
    ("CV-12x6-12x8 sub td d2",
     lambda: cycle_bouquet([6] * 12 + [8] * 12, "vertex"), "subgraph", "td", 2,
     "Unbounded", None, "sub-td-cv-12x6-12x8", None),
    ("CV668 sub td d2", lambda: cycle_bouquet([6, 6, 8], "vertex"), "subgraph", "td", 2,
     "Open", None, None, "unbounded holds for d >= 3"),
    ("CE88 sub td d3", lambda: cycle_bouquet([8, 8], "edge"), "subgraph", "td", 3,
     "Unbounded", "samecyc-unbounded-d3", None, None),
    ("C6+P3 sub td d2", lambda: disjoint_union(cycle_graph(6), path_graph(3)),
     "subgraph", "td", 2, "Bounded", "unicyclic-d2", None, None),
    # --- subgraph relation, other parameters ----------------------------------
    ("H3 sub pw d2", lambda: h_graph(3, 1), "subgraph", "pw", 2,
     "Bounded", "pw-td-contrast-d2", None, None),
    ("C5 sub tw d2", lambda: cycle_graph(5), "subgraph", "tw", 2,
     "Unbounded", "cw-tw-contrast-d2", None, None),
    ("C5 sub cw d2", lambda: cycle_graph(5), "subgraph", "cw", 2,
     "Bounded", "cw-tw-contrast-d2", None, None),
    ("K3 sub cw d2", lambda: complete_graph(3), "subgraph", "cw", 2,
     "Unbounded", "induced-cw-dichotomy", None, None),
    ("claw sub pw d2", lambda: _claw(), "subgraph", "pw", 2,
     "Bounded", "subgraph-nodiam-pw", None, None),
    ("C6 sub pw dinf", lambda: cycle_graph(6), "subgraph", "pw", INF,
     "Unbounded", "subgraph-nodiam-pw", None, None),
    ("H3 sub pw d3", lambda: h_graph(3, 1), "subgraph", "pw", 3,
     "Open", None, None, "bounded holds for d <= 2"),
]

assert len(CATALOG) == 60, len(CATALOG)
