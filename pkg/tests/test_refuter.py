import os

from diamwidth.graphs import graph_from_edges
from diamwidth.refuter import refute_path, verify_model


def test_c6_refutation_at_diameter_two():
    out = refute_path(3, 2, 10)
    assert out.status == "Refuted"
    assert out.dead_obligation == (0, 4)  # any common neighbour closes a C6


def test_c4_consistency_small_lengths():
    for L in range(3, 9):
        out = refute_path(2, 2, L, budget=200_000)
        assert out.status != "Refuted"
        if out.status == "Consistent":
            ok, reason = verify_model(out.model, 2, 2, L)
            assert ok, reason


def test_diameter3_consistency():
    out = refute_path(2, 3, 10, budget=500_000)
    assert out.status == "Consistent"
    ok, reason = verify_model(out.model, 2, 3, 10)
    assert ok, reason
    assert out.witnesses_used <= (3 * 10) // 3


def test_budget_exhaustion_is_reported():
    out = refute_path(2, 2, 20, budget=2_000)
    assert out.status == "BudgetExhausted"
    assert out.nodes >= 2_000


def test_verify_model_rejects_planted_failures():
    # planted C4 (r=2): path 0-1-2-3 plus witness adjacent to 0 and 2
    g = graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 2), (4, 3)])
    ok, reason = verify_model(g, 2, 2, 3)
    assert not ok and "C_4" in reason
    # missing connector: bare path of length 4 at d=2
    p = graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    ok, reason = verify_model(p, 2, 2, 4)
    assert not ok and "distance" in reason
    # broken path adjacency
    chord = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    ok, reason = verify_model(chord, 2, 2, 3)
    assert not ok and "adjacency" in reason


def test_state_file_roundtrip(tmp_path):
    state = str(tmp_path / "refute-state.json")
    out1 = refute_path(2, 2, 16, budget=3_000, state_path=state)
    assert out1.status == "BudgetExhausted"
    assert os.path.exists(state)
    out2 = refute_path(2, 2, 16, budget=3_000, state_path=state)
    assert out2.status in ("BudgetExhausted", "Consistent")


def test_vocabulary_is_reported():
    out = refute_path(2, 2, 6)
    assert out.vocabulary == 9
