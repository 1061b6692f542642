"""Distance-type refutation engine over completions of an induced path.

Question: can an induced path p_0..p_L live inside a C_{2r}-subgraph-free
graph of diameter at most d?  The search adds auxiliary witness vertices
and, for every path pair at distance more than d, branches over all
connector templates of length at most d (a common neighbour; a witness
shifted one step along the path; the two-witness bridge), rejecting any
extension that closes a C_{2r} subgraph.

Outcomes:

* Consistent: a concrete partial model was found (path + witnesses +
  adjacency); it verifies against all three constraint families.  Pair
  distances among witnesses are left undecided; only path pairs carry
  obligations.
* Refuted: the whole search space over the bounded witness vocabulary
  (at most W auxiliary vertices, default 3L/d) is exhausted.  This is a
  proof relative to that vocabulary; connector templates are exhaustive,
  so a refutation with vocabulary W rules out any qualifying graph whose
  witness set fits in W.  A dead-obligation refutation (every connector
  template for some pair closes a C_{2r} against the bare path) is
  vocabulary-independent and rules out every qualifying graph.
* BudgetExhausted: the node budget ran out first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graphs import Graph, bit_indices
from .cycles import find_cycle_subgraph

DEFAULT_REFUTE_BUDGET = 500_000
_STATE_DUMP_EVERY = 50_000


@dataclass(frozen=True)
class RefutationOutcome:
    status: str  # "Refuted" | "Consistent" | "BudgetExhausted"
    model: Graph | None
    nodes: int
    witnesses_used: int
    dead_obligation: tuple[int, int] | None = None
    vocabulary: int = 0


def _connector_shapes(i: int, j: int, d: int, L: int):
    """All templates for a path of length <= d between p_i and p_j whose
    interior is not entirely on the (chordless) path."""
    shapes: list[tuple] = [("single", i, j)]
    if d == 3:
        if j - i >= 2:
            shapes.append(("single", i + 1, j))
            shapes.append(("single", i, j - 1))
        if i >= 1:
            shapes.append(("single", i - 1, j))
        if j + 1 <= L:
            shapes.append(("single", i, j + 1))
        shapes.append(("double", i, j))
    return shapes


class _Search:
    def __init__(self, r: int, d: int, L: int, budget: int | None, vocabulary: int):
        if r < 2 or d not in (2, 3) or L < 2:
            raise ValueError("need r >= 2, d in {2,3}, L >= 2")
        self.r = r
        self.d = d
        self.L = L
        self.cycle_len = 2 * r
        self.budget = budget
        self.W = vocabulary
        self.size = L + 1 + self.W
        self.adj = [0] * self.size
        for i in range(L):
            self._add_edge(i, i + 1)
        self.used_witnesses = 0
        self.nodes = 0
        self.obligations = [
            (i, j)
            for j in range(d + 1, L + 1)
            for i in range(0, j - d)
        ]
        self.obligations.sort(key=lambda p: (p[1], p[0]))
        self.decisions: list[int] = []
        self.state_path: str | None = None

    def _add_edge(self, a: int, b: int) -> None:
        self.adj[a] |= 1 << b
        self.adj[b] |= 1 << a

    def _remove_edge(self, a: int, b: int) -> None:
        self.adj[a] &= ~(1 << b)
        self.adj[b] &= ~(1 << a)

    def _has_edge(self, a: int, b: int) -> bool:
        return bool((self.adj[a] >> b) & 1)

    def _dist_at_most(self, a: int, b: int, d: int) -> bool:
        seen = 1 << a
        frontier = seen
        for _ in range(d):
            grow = 0
            for v in bit_indices(frontier):
                grow |= self.adj[v]
            if (grow >> b) & 1:
                return True
            frontier = grow & ~seen
            seen |= grow
            if not frontier:
                return False
        return False

    def _closes_forbidden_cycle(self, a: int, b: int) -> bool:
        """Any cycle of exactly 2r vertices through edge (a, b)?"""
        target = self.cycle_len
        adj = self.adj

        def dfs(last: int, used: int, count: int) -> bool:
            if count == target:
                return bool((adj[last] >> a) & 1)
            for u in bit_indices(adj[last] & ~used):
                if dfs(u, used | (1 << u), count + 1):
                    return True
            return False

        return dfs(b, (1 << a) | (1 << b), 2)

    # -- choice enumeration ------------------------------------------------

    def _choices(self, i: int, j: int):
        """Concrete edge sets (with witness allocation counts) satisfying
        the obligation, deterministic order: existing witnesses before
        fresh ones, shapes in template order."""
        out = []
        for shape in _connector_shapes(i, j, self.d, self.L):
            if shape[0] == "single":
                _, a, b = shape
                for w in range(self.used_witnesses):
                    wid = self.L + 1 + w
                    edges = [
                        (wid, e) for e in (a, b) if not self._has_edge(wid, e)
                    ]
                    if edges:
                        out.append((edges, 0))
                if self.used_witnesses < self.W:
                    wid = self.L + 1 + self.used_witnesses
                    out.append(([(wid, a), (wid, b)], 1))
            else:
                _, a, b = shape
                cands = list(range(self.used_witnesses))
                fresh0 = self.used_witnesses
                pairs = []
                for x in cands:
                    for y in cands:
                        if x != y:
                            pairs.append((x, y, 0))
                if fresh0 < self.W:
                    for x in cands:
                        pairs.append((x, fresh0, 1))
                        pairs.append((fresh0, x, 1))
                    if fresh0 + 1 < self.W:
                        pairs.append((fresh0, fresh0 + 1, 2))
                for x, y, fresh in pairs:
                    xid, yid = self.L + 1 + x, self.L + 1 + y
                    edges = [
                        (u, v)
                        for (u, v) in ((xid, a), (xid, yid), (yid, b))
                        if not self._has_edge(u, v)
                    ]
                    if edges:
                        out.append((edges, fresh))
        return out

    # -- dead-shape prepass -------------------------------------------------

    def dead_obligation(self) -> tuple[int, int] | None:
        """An obligation all of whose templates close a C_{2r} against the
        bare path; its existence refutes independently of the vocabulary."""
        probe = _Search(self.r, self.d, self.L, None, 2)
        for (i, j) in self.obligations:
            all_dead = True
            for shape in _connector_shapes(i, j, self.d, self.L):
                if shape[0] == "single":
                    _, a, b = shape
                    wid = probe.L + 1
                    edges = [(wid, a), (wid, b)]
                else:
                    _, a, b = shape
                    xid, yid = probe.L + 1, probe.L + 2
                    edges = [(xid, a), (xid, yid), (yid, b)]
                for u, v in edges:
                    probe._add_edge(u, v)
                bad = any(probe._closes_forbidden_cycle(u, v) for u, v in edges)
                for u, v in edges:
                    probe._remove_edge(u, v)
                if not bad:
                    all_dead = False
                    break
            if all_dead:
                return (i, j)
        return None

    # -- main search ---------------------------------------------------------

    def run(self, replay: list[int] | None = None):
        dead = self.dead_obligation()
        if dead is not None:
            return RefutationOutcome(
                "Refuted", None, self.nodes, 0, dead, self.W
            )
        status = self._dfs(0, replay or [])
        if status == "found":
            return RefutationOutcome(
                "Consistent", self.model_graph(), self.nodes,
                self.used_witnesses, None, self.W,
            )
        if status == "budget":
            return RefutationOutcome(
                "BudgetExhausted", None, self.nodes, self.used_witnesses, None, self.W
            )
        return RefutationOutcome("Refuted", None, self.nodes, 0, None, self.W)

    def _dfs(self, k: int, replay: list[int]):
        if k == len(self.obligations):
            return "found"
        i, j = self.obligations[k]
        if self._dist_at_most(i, j, self.d):
            self.decisions.append(-1)
            res = self._dfs(k + 1, replay[1:] if replay else [])
            self.decisions.pop()
            return res
        choices = self._choices(i, j)
        start = replay[0] if replay else 0
        if start == -1:
            start = 0
        for ci in range(start, len(choices)):
            edges, fresh = choices[ci]
            self.nodes += 1
            if self.budget is not None and self.nodes > self.budget:
                self._dump_state()
                return "budget"
            for u, v in edges:
                self._add_edge(u, v)
            self.used_witnesses += fresh
            if not any(self._closes_forbidden_cycle(u, v) for u, v in edges):
                self.decisions.append(ci)
                sub_replay = replay[1:] if (replay and ci == start) else []
                res = self._dfs(k + 1, sub_replay)
                if res == "found":
                    return res  # keep the model's edges in place
                self.decisions.pop()
                if res == "budget":
                    self.used_witnesses -= fresh
                    for u, v in edges:
                        self._remove_edge(u, v)
                    return res
            self.used_witnesses -= fresh
            for u, v in edges:
                self._remove_edge(u, v)
            if self.nodes % _STATE_DUMP_EVERY == 0:
                self._dump_state()
        return "exhausted"

    def model_graph(self) -> Graph:
        n = self.L + 1 + self.used_witnesses
        labels = {i: f"p:{i}" for i in range(self.L + 1)}
        labels.update(
            {self.L + 1 + k: f"w:{k}" for k in range(self.used_witnesses)}
        )
        full = (1 << n) - 1
        return Graph(n, tuple(m & full for m in self.adj[:n]), tuple(sorted(labels.items())))

    def _dump_state(self) -> None:
        if self.state_path:
            payload = {
                "r": self.r,
                "d": self.d,
                "L": self.L,
                "vocabulary": self.W,
                "nodes": self.nodes,
                "decisions": list(self.decisions),
            }
            with open(self.state_path, "w", encoding="utf-8") as fh:
                json.dump(payload, fh)


def refute_path(
    r: int,
    d: int,
    L: int,
    budget: int | None = DEFAULT_REFUTE_BUDGET,
    vocabulary: int | None = None,
    state_path: str | None = None,
) -> RefutationOutcome:
    """Search for a C_{2r}-free, diameter-<=d completion pattern around an
    induced path with L edges.  See the module docstring for the exact
    semantics of the three outcomes."""
    W = vocabulary if vocabulary is not None else max(1, (3 * L) // d)
    search = _Search(r, d, L, budget, W)
    search.state_path = state_path
    replay = None
    if state_path:
        try:
            with open(state_path, "r", encoding="utf-8") as fh:
                saved = json.load(fh)
            if (saved.get("r"), saved.get("d"), saved.get("L")) == (r, d, L):
                replay = list(saved.get("decisions", []))
        except (OSError, ValueError):
            replay = None
    return search.run(replay)


def verify_model(model: Graph, r: int, d: int, L: int) -> tuple[bool, str]:
    """Re-check the three constraint families on an emitted model."""
    for i in range(L + 1):
        for j in range(i + 1, L + 1):
            has = model.has_edge(i, j)
            if (j - i == 1) != has:
                return False, f"path adjacency broken at ({i},{j})"
    hit = find_cycle_subgraph(model, 2 * r, budget=None)
    if hit is not None:
        return False, f"contains C_{2*r}: {hit}"
    from .graphs import distances_from

    for i in range(L + 1):
        dist = distances_from(model, i)
        for j in range(i + 1, L + 1):
            if dist[j] > d:
                return False, f"pair ({i},{j}) at distance {dist[j]} > {d}"
    return True, "ok"
