"""Structural recognizers for forbidden graphs and the boundedness oracle.

``profile`` computes the recognizer flags a forbidden graph F can satisfy
(clique, planarity, apex variants, spider classes, V-type/E-type parses,
...).  ``classify`` answers "is width parameter p bounded on the class of
F-excluded graphs of diameter at most d?" by evaluating a versioned rule
registry (data/classification_rules.json), returning Bounded, Unbounded or
Open with a machine-readable citation key and the fired-rule trace.  Every
applicable rule is evaluated, so a registry inconsistency (a query firing
both answers) raises instead of being masked by first-match ordering.

Supergraph conditions that need containment search run under a node
budget; exhaustion downgrades the answer to Open with a note, never to a
wrong verdict.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources

from .canon import are_isomorphic
from .containment import ABSENT, BUDGET, has_induced_subgraph
from .cycles import CyclePacking, cycle_packing, find_cycle_subgraph
from .families import h_graph, path_graph
from .graphs import (
    Graph,
    bit_indices,
    component_masks,
    cyclomatic_number,
    delete_vertex,
    induced_subgraph,
    is_connected,
    is_bipartite,
    is_forest,
    is_linear_forest,
    is_path_graph,
)
from .planarity import is_apex_planar, is_planar

INF_DIAMETER = math.inf
RELATIONS = ("minor", "induced", "subgraph")
PARAMETERS = ("td", "pw", "tw", "cw")
DEFAULT_CLASSIFY_BUDGET = 400_000


# -- basic recognizers --------------------------------------------------------


def is_clique(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def induced_subgraph_of_p2(g: Graph) -> bool:
    return g.n == 1 or (g.n == 2 and g.m == 1)


def induced_subgraph_of_p4(g: Graph) -> bool:
    if g.n > 4:
        return False
    return has_induced_subgraph(path_graph(4), g, budget=None) is not ABSENT


def is_apex_forest(g: Graph) -> bool:
    if is_forest(g):
        return True
    return any(is_forest(delete_vertex(g, v)) for v in range(g.n))


def is_apex_linear_forest(g: Graph) -> bool:
    if is_linear_forest(g):
        return True
    return any(is_linear_forest(delete_vertex(g, v)) for v in range(g.n))


def is_subdivided_claw(g: Graph) -> bool:
    """Tree with maximum degree 3 and exactly one degree-3 vertex."""
    if not is_connected(g) or g.m != g.n - 1:
        return False
    degs = g.degrees
    return max(degs) == 3 and sum(1 for d in degs if d == 3) == 1


def in_script_s(g: Graph) -> bool:
    """Every component a path or a subdivided claw."""
    if g.n == 0:
        return False
    for comp in component_masks(g):
        sub, _ = induced_subgraph(g, list(bit_indices(comp)))
        if not (is_path_graph(sub) or is_subdivided_claw(sub)):
            return False
    return True


def subgraph_of_subdivided_star(g: Graph) -> bool:
    """Member of the closure of subdivided stars under subgraphs:
    a forest with at most one vertex of degree >= 3."""
    if g.n == 0:
        return False
    return is_forest(g) and sum(1 for d in g.degrees if d >= 3) <= 1


def hgraph2_level(g: Graph, budget: int | None = None) -> int | None:
    """Minimum l with g a subgraph of the spine-2 H-graph at level l."""
    if g.n == 0 or not is_forest(g):
        return None
    degs = g.degrees
    if max(degs, default=0) > 3 or sum(1 for d in degs if d >= 3) > 2:
        return None
    from .containment import has_subgraph

    for level in range(1, g.n + 1):
        host = h_graph(2, level)
        res = has_subgraph(host, g, budget)
        if res is BUDGET:
            return None
        if res is not ABSENT:
            return level
    return None


def has_c4_subgraph(g: Graph) -> bool:
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (g.adj[u] & g.adj[v]).bit_count() >= 2:
                return True
    return False


def has_triangle(g: Graph) -> bool:
    return any((g.adj[u] & g.adj[v]) for u, v in g.edges())


def is_cycle_graph_of(g: Graph, length: int | None = None) -> int | None:
    """The cycle length if g is exactly a cycle (optionally of ``length``)."""
    if g.n < 3 or g.m != g.n or not is_connected(g):
        return None
    if any(d != 2 for d in g.degrees):
        return None
    if length is not None and g.n != length:
        return None
    return g.n


def parse_vtype(g: Graph) -> tuple[int, ...] | None:
    """Cycle lengths if g is exactly a vertex-shared bouquet (k >= 2)."""
    if not is_connected(g) or g.n < 5:
        return None
    hubs = [v for v in range(g.n) if g.degree(v) >= 3]
    if len(hubs) != 1:
        return None
    v0 = hubs[0]
    if g.degree(v0) % 2 or g.degree(v0) < 4:
        return None
    if any(g.degree(v) != 2 for v in range(g.n) if v != v0):
        return None
    lengths = []
    rest = ((1 << g.n) - 1) & ~(1 << v0)
    for comp in component_masks(g, rest):
        sub, old = induced_subgraph(g, list(bit_indices(comp)))
        if not is_path_graph(sub) or sub.n < 2:
            return None
        ends = [old[i] for i in range(sub.n) if sub.degree(i) == 1]
        if len(ends) != 2 or not all(g.has_edge(e, v0) for e in ends):
            return None
        lengths.append(sub.n + 1)
    if len(lengths) != g.degree(v0) // 2:
        return None
    return tuple(sorted(lengths))


def parse_etype(g: Graph) -> tuple[int, ...] | None:
    """Cycle lengths if g is exactly an edge-shared bouquet (k >= 2)."""
    if not is_connected(g) or g.n < 4:
        return None
    hubs = [v for v in range(g.n) if g.degree(v) >= 3]
    if len(hubs) != 2:
        return None
    u, w = hubs
    if not g.has_edge(u, w) or g.degree(u) != g.degree(w) or g.degree(u) < 3:
        return None
    if any(g.degree(v) != 2 for v in range(g.n) if v not in (u, w)):
        return None
    k = g.degree(u) - 1
    lengths = []
    rest = ((1 << g.n) - 1) & ~(1 << u) & ~(1 << w)
    for comp in component_masks(g, rest):
        sub, old = induced_subgraph(g, list(bit_indices(comp)))
        if not is_path_graph(sub):
            return None
        if sub.n == 1:
            x = old[0]
            if not (g.has_edge(x, u) and g.has_edge(x, w)):
                return None
        else:
            ends = [old[i] for i in range(sub.n) if sub.degree(i) == 1]
            hits_u = [e for e in ends if g.has_edge(e, u)]
            hits_w = [e for e in ends if g.has_edge(e, w)]
            if len(hits_u) != 1 or len(hits_w) != 1 or hits_u[0] == hits_w[0]:
                return None
        lengths.append(sub.n + 2)
    if len(lengths) != k or k < 2:
        return None
    return tuple(sorted(lengths))


def subgraph_of_uniform_vtype(g: Graph) -> bool:
    """True iff g is a subgraph of C^V_{k*[2l]} for some k >= 1, l >= 3.

    Structure: at most one vertex of degree >= 3, all cycles through it
    and of one common even length 2l >= 6, and every hub arm or detached
    path component fits inside an opened petal (at most 2l-1 vertices).
    """
    if g.n == 0:
        return False
    hubs = [v for v in range(g.n) if g.degree(v) >= 3]
    if len(hubs) > 1:
        return False
    if hubs:
        v0 = hubs[0]
    else:
        cyc_comps = []
        for comp in component_masks(g):
            sub, old = induced_subgraph(g, list(bit_indices(comp)))
            if sub.m >= sub.n:
                cyc_comps.append(old)
        if len(cyc_comps) > 1:
            return False
        if not cyc_comps:
            return True  # linear forest: any large even petal length works
        v0 = cyc_comps[0][0]
    cycle_len = None
    pieces = []
    rest = ((1 << g.n) - 1) & ~(1 << v0)
    for comp in component_masks(g, rest):
        sub, old = induced_subgraph(g, list(bit_indices(comp)))
        if not is_path_graph(sub):
            return False
        if sub.n == 1:
            ends = [old[0]]
        else:
            ends = [old[i] for i in range(sub.n) if sub.degree(i) == 1]
        anchored = [e for e in ends if g.has_edge(e, v0)]
        if len(anchored) == 2:
            length = sub.n + 1
            if cycle_len is None:
                cycle_len = length
            if length != cycle_len:
                return False
        else:
            pieces.append(sub.n)
    if cycle_len is not None:
        if cycle_len % 2 or cycle_len < 6:
            return False
        return all(p <= cycle_len - 1 for p in pieces)
    return True


# -- heavier supergraph checks (budgeted; None = unknown) ---------------------


def contains_cv_12x6_12x8(g: Graph, budget: int | None) -> bool | None:
    if g.n < 145:
        return False
    parsed = parse_vtype(g)
    if parsed is not None:
        return (
            sum(1 for l in parsed if l == 6) >= 12
            and sum(1 for l in parsed if l == 8) >= 12
        )
    for v in range(g.n):
        res = cycle_packing(g, ("vertex", v), {6: 12, 8: 12}, budget)
        if res is BUDGET:
            return None
        if isinstance(res, CyclePacking):
            return True
    return False


def contains_ce_uniform(g: Graph, budget: int | None) -> bool | None:
    if cyclomatic_number(g) < 6:
        return False
    parsed = parse_etype(g)
    unknown = False
    l = 3
    while True:
        k = 2 * (2 * l - 3)
        size = 2 + k * (2 * l - 2)
        if size > g.n:
            break
        if parsed is not None:
            if sum(1 for x in parsed if x == 2 * l) >= k:
                return True
        else:
            for u, v in g.edges():
                res = cycle_packing(g, ("edge", u, v), {2 * l: k}, budget)
                if res is BUDGET:
                    unknown = True
                elif isinstance(res, CyclePacking):
                    return True
        l += 1
    return None if unknown else False


def contains_samecyc_pair(g: Graph, budget: int | None) -> bool | None:
    """A vertex- or edge-shared pair of cycles with lengths (4a, 4b),
    a,b >= 2, or (2l, 2l), l >= 4 -- the diameter-3 unbounded patterns."""
    if cyclomatic_number(g) < 2 or g.n < 14:  # smallest: edge-shared 8,8 pair
        return False
    pairs = []
    for l1 in range(8, g.n + 1, 2):
        for l2 in range(l1, g.n + 1, 2):
            if l1 + l2 - 2 > g.n:
                break
            if (l1 % 4 == 0 and l2 % 4 == 0) or l1 == l2:
                pairs.append((l1, l2))
    unknown = False
    for l1, l2 in pairs:
        quota = {l1: 2} if l1 == l2 else {l1: 1, l2: 1}
        if l1 + l2 - 1 <= g.n:
            for v in range(g.n):
                res = cycle_packing(g, ("vertex", v), quota, budget)
                if res is BUDGET:
                    unknown = True
                elif isinstance(res, CyclePacking):
                    return True
        for u, v in g.edges():
            res = cycle_packing(g, ("edge", u, v), quota, budget)
            if res is BUDGET:
                unknown = True
            elif isinstance(res, CyclePacking):
                return True
    return None if unknown else False


# -- the profile --------------------------------------------------------------


@dataclass(frozen=True)
class StructureProfile:
    n: int
    components: int
    is_clique: bool
    induced_subgraph_of_p2: bool
    induced_subgraph_of_p4: bool
    is_planar: bool
    is_apex_planar: bool
    is_forest: bool
    is_apex_forest: bool
    is_linear_forest: bool
    is_apex_linear_forest: bool
    in_script_s: bool
    subgraph_of_subdivided_star: bool
    hgraph2_level: int | None
    is_bipartite: bool
    contains_c4_subgraph: bool
    cycle_count: int
    unicyclic: bool
    vtype_lengths: tuple[int, ...] | None
    etype_lengths: tuple[int, ...] | None


def profile(g: Graph) -> StructureProfile:
    return StructureProfile(
        n=g.n,
        components=len(component_masks(g)),
        is_clique=is_clique(g),
        induced_subgraph_of_p2=induced_subgraph_of_p2(g),
        induced_subgraph_of_p4=induced_subgraph_of_p4(g),
        is_planar=is_planar(g),
        is_apex_planar=is_apex_planar(g),
        is_forest=is_forest(g),
        is_apex_forest=is_apex_forest(g),
        is_linear_forest=is_linear_forest(g),
        is_apex_linear_forest=is_apex_linear_forest(g),
        in_script_s=in_script_s(g),
        subgraph_of_subdivided_star=subgraph_of_subdivided_star(g),
        hgraph2_level=hgraph2_level(g),
        is_bipartite=is_bipartite(g),
        contains_c4_subgraph=has_c4_subgraph(g),
        cycle_count=cyclomatic_number(g),
        unicyclic=cyclomatic_number(g) == 1,
        vtype_lengths=parse_vtype(g),
        etype_lengths=parse_etype(g),
    )


def reduce_components(g: Graph) -> Graph:
    """The component deciding treedepth boundedness under the subgraph
    relation: the unique non-path component if there is one, else a
    longest path component.  With two or more non-path components the
    graph is returned unchanged (it is never an apex linear forest, so
    the canonical unbounded rule decides).  Idempotent."""
    comps = component_masks(g)
    if len(comps) <= 1:
        return g
    subs = [induced_subgraph(g, list(bit_indices(c)))[0] for c in comps]
    nonpath = [s for s in subs if not is_path_graph(s)]
    if len(nonpath) == 1:
        return nonpath[0]
    if len(nonpath) > 1:
        return g
    return max(subs, key=lambda s: s.n)


# -- the oracle ---------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    answer: str  # "Bounded" | "Unbounded" | "Open"
    citation: str | None
    note: str = ""
    fired: tuple[str, ...] = ()
    trace: tuple[str, ...] = ()


class RegistryConsistencyError(RuntimeError):
    pass


def load_registry() -> dict:
    payload = resources.files("diamwidth.data").joinpath(
        "classification_rules.json"
    ).read_text(encoding="utf-8")
    return json.loads(payload)


_REGISTRY_CACHE: dict | None = None


def _registry() -> dict:
    global _REGISTRY_CACHE
    if _REGISTRY_CACHE is None:
        _REGISTRY_CACHE = load_registry()
    return _REGISTRY_CACHE


class _PredicateContext:
    """Lazy, memoized predicate evaluation for one query; tri-state
    (True / False / None for budget-limited containment checks)."""

    def __init__(self, graphs: list[Graph], budget: int | None):
        self.graphs = graphs
        self.g = graphs[0]
        self.budget = budget
        self.cache: dict[str, bool | None] = {}

    def eval(self, name: str) -> bool | None:
        negate = name.startswith("!")
        base = name[1:] if negate else name
        if base not in self.cache:
            self.cache[base] = self._compute(base)
        val = self.cache[base]
        if val is None:
            return None
        return (not val) if negate else val

    def _compute(self, name: str) -> bool | None:
        g = self.g
        if name == "clique":
            return is_clique(g)
        if name == "in_p2":
            return induced_subgraph_of_p2(g)
        if name == "in_p4":
            return induced_subgraph_of_p4(g)
        if name == "bipartite":
            return is_bipartite(g)
        if name == "forest":
            return is_forest(g)
        if name == "linear_forest":
            return is_linear_forest(g)
        if name == "apex_linear_forest":
            return is_apex_linear_forest(g)
        if name == "script_s":
            return in_script_s(g)
        if name == "sstar_subgraph":
            return subgraph_of_subdivided_star(g)
        if name == "hgraph2_subgraph":
            return hgraph2_level(g, self.budget) is not None
        if name == "unicyclic":
            return cyclomatic_number(g) == 1
        if name == "c4_subgraph":
            return has_c4_subgraph(g)
        if name == "c3_subgraph":
            return has_triangle(g)
        if name == "c6_subgraph":
            hit = find_cycle_subgraph(g, 6, self.budget)
            if hit is BUDGET:
                return None
            return hit is not None
        if name == "is_c8":
            return is_cycle_graph_of(g, 8) is not None
        if name == "even_cycle_10_to_24":
            k = is_cycle_graph_of(g)
            return k is not None and k % 2 == 0 and 10 <= k <= 24
        if name == "odd_cycle_ge5":
            k = is_cycle_graph_of(g)
            return k is not None and k % 2 == 1 and k >= 5
        if name == "is_h3":
            return g.n == 8 and g.m == 7 and are_isomorphic(g, h_graph(3, 1))
        if name == "vtype_pair_even6":
            lengths = parse_vtype(g)
            return (
                lengths is not None
                and len(lengths) == 2
                and all(l % 2 == 0 and l >= 6 for l in lengths)
            )
        if name == "etype_pair_even6":
            lengths = parse_etype(g)
            return (
                lengths is not None
                and len(lengths) == 2
                and all(l % 2 == 0 and l >= 6 for l in lengths)
            )
        if name == "vtype_uniform_subgraph":
            return subgraph_of_uniform_vtype(g)
        if name == "contains_cv_12x6_12x8":
            return contains_cv_12x6_12x8(g, self.budget)
        if name == "contains_ce_uniform":
            return contains_ce_uniform(g, self.budget)
        if name == "contains_samecyc_pair":
            return contains_samecyc_pair(g, self.budget)
        if name == "any_apex_planar":
            return any(is_apex_planar(h) for h in self.graphs)
        if name == "any_apex_forest":
            return any(is_apex_forest(h) for h in self.graphs)
        if name == "any_apex_linear_forest":
            return any(is_apex_linear_forest(h) for h in self.graphs)
        if name == "any_planar":
            return any(is_planar(h) for h in self.graphs)
        if name == "any_forest":
            return any(is_forest(h) for h in self.graphs)
        if name == "any_linear_forest":
            return any(is_linear_forest(h) for h in self.graphs)
        raise KeyError(f"unknown predicate {name!r}")


def _rule_applies(rule: dict, relation: str, parameter: str, d) -> bool:
    if relation not in rule["relations"] or parameter not in rule["parameters"]:
        return False
    d_min = rule["d_min"]
    d_max = rule["d_max"]
    lo = INF_DIAMETER if d_min == "inf" else d_min
    if d_max == "inf":
        hi = INF_DIAMETER
    elif d_max == "finite":
        if d == INF_DIAMETER:
            return False
        hi = INF_DIAMETER
    else:
        hi = d_max
    return lo <= d <= hi


def _evaluate_rules(ctx: _PredicateContext, relation: str, parameter: str, d):
    fired, unknown = [], []
    registry = _registry()
    for rule in registry["rules"]:
        if not _rule_applies(rule, relation, parameter, d):
            continue
        vals = [ctx.eval(req) for req in rule["requires"]]
        if all(v is True for v in vals):
            fired.append(rule)
        elif any(v is None for v in vals) and all(v is not False for v in vals):
            unknown.append(rule)
    return fired, unknown


def classify(
    forbidden,
    relation: str,
    parameter: str,
    d,
    budget: int | None = DEFAULT_CLASSIFY_BUDGET,
) -> Verdict:
    """Boundedness verdict for the (forbidden, relation, parameter, d) query.

    ``forbidden`` is a Graph, or a list of Graphs for the minor relation.
    ``d`` is an integer >= 1 or math.inf for no diameter bound.
    """
    if relation not in RELATIONS:
        raise ValueError(f"unknown relation {relation!r}")
    if parameter not in PARAMETERS:
        raise ValueError(f"unknown parameter {parameter!r}")
    if not (d == INF_DIAMETER or (isinstance(d, int) and d >= 1)):
        raise ValueError("d must be an integer >= 1 or infinity")
    if isinstance(forbidden, Graph):
        graphs = [forbidden]
    else:
        graphs = list(forbidden)
        if relation != "minor":
            raise ValueError("graph sets are only meaningful for the minor relation")
    if not graphs or any(h.n == 0 for h in graphs):
        raise ValueError("forbidden graphs must be nonempty")

    trace: list[str] = []
    if relation == "subgraph" and parameter == "td" and len(component_masks(graphs[0])) > 1:
        reduced = reduce_components(graphs[0])
        if reduced is not graphs[0]:
            trace.append(
                "component-reduction: replaced disconnected forbidden graph by "
                f"its deciding component ({reduced.n} vertices)"
            )
            graphs = [reduced]

    ctx = _PredicateContext(graphs, budget)
    fired, unknown = _evaluate_rules(ctx, relation, parameter, d)
    answers = {r["answer"] for r in fired}
    if "Bounded" in answers and "Unbounded" in answers:
        raise RegistryConsistencyError(
            f"contradictory rules fired: {[r['id'] for r in fired]}"
        )
    if fired:
        lead = fired[0]
        note = "; ".join(sorted({r["note"] for r in fired if r.get("note")}))
        return Verdict(
            answer=lead["answer"],
            citation=lead["citation"],
            note=note,
            fired=tuple(r["id"] for r in fired),
            trace=tuple(trace),
        )

    notes = []
    if unknown:
        notes.append(
            "budget-limited checks left undecided: "
            + ",".join(r["id"] for r in unknown)
        )
    # nearest known facts at other diameters
    if d != INF_DIAMETER:
        for d2 in range(min(d - 1, 6), 0, -1):
            f2, _ = _evaluate_rules(ctx, relation, parameter, d2)
            if f2 and f2[0]["answer"] == "Bounded":
                notes.append(f"bounded holds for d <= {d2}")
                break
        for d2 in (d + 1, d + 2, INF_DIAMETER):
            f2, _ = _evaluate_rules(ctx, relation, parameter, d2)
            if f2 and f2[0]["answer"] == "Unbounded":
                label = "unbounded diameter" if d2 == INF_DIAMETER else f"d >= {d2}"
                notes.append(f"unbounded holds for {label}")
                break
    if relation == "subgraph" and parameter == "td" and d == 3:
        k = is_cycle_graph_of(graphs[0])
        if k is not None and k % 2 == 0 and k >= 8:
            notes.append("conjecture-even-cycles-d3 applies")
        elif cyclomatic_number(graphs[0]) >= 2:
            notes.append("conjecture-two-cycles-d3 applies")
    return Verdict("Open", None, "; ".join(notes), (), tuple(trace))


def citation_statement(key: str) -> str:
    return _registry()["citations"][key]
