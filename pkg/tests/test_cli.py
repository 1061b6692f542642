import json

from diamwidth.cli import main
from diamwidth.formats import read_graph


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


def test_construct_and_width(tmp_path, capsys):
    g6 = str(tmp_path / "g.g6")
    code, _ = run(["construct", "cycle:6", "--out", g6], capsys)
    assert code == 0
    cert = str(tmp_path / "cert.json")
    code, out = run(["width", "td", "--in", g6, "--certificate", cert], capsys)
    assert code == 0
    assert json.loads(out.strip())["value"] == 4
    payload = json.loads(open(cert).read())
    assert payload["schema"] == "td-elimination-forest/v1"


def test_construct_writes_labels(tmp_path, capsys):
    g6 = str(tmp_path / "g.g6")
    labels = str(tmp_path / "labels.json")
    code, _ = run(["construct", "gadget-cv:8", "--out", g6, "--labels", labels], capsys)
    assert code == 0
    g = read_graph(g6, "graph6", labels)
    assert g.find_label("Z:x:0,1") >= 0


def test_check_subgraph_and_budget_exit(tmp_path, capsys):
    host = str(tmp_path / "host.g6")
    pat = str(tmp_path / "pat.g6")
    run(["construct", "biclique:2,2", "--out", host], capsys)
    run(["construct", "cycle:4", "--out", pat], capsys)
    code, out = run(["check", "subgraph", "--host", host, "--pattern", pat], capsys)
    assert code == 0 and json.loads(out)["result"] == "found"
    run(["construct", "clique:8", "--out", host], capsys)
    run(["construct", "clique:7", "--out", pat], capsys)
    code, out = run(
        ["check", "subgraph", "--host", host, "--pattern", pat, "--budget", "1"],
        capsys,
    )
    assert code == 3 and json.loads(out)["result"] == "budget"


def test_check_efree(tmp_path, capsys):
    host = str(tmp_path / "host.g6")
    run(["construct", "ce:6,6", "--out", host], capsys)
    code, out = run(
        ["check", "efree", "--host", host, "--lengths", "6,6"], capsys
    )
    assert code == 0
    assert json.loads(out)["result"] == "contains"


def test_check_vfree_multiplicity_shorthand(tmp_path, capsys):
    host = str(tmp_path / "cv.g6")
    run(["construct", "gadget-cv:32", "--out", host], capsys)
    code, out = run(
        ["check", "vfree", "--host", host, "--lengths", "12x6,12x8"], capsys
    )
    assert code == 0
    assert json.loads(out)["result"] == "free"
    code, out = run(
        ["check", "vfree", "--host", host, "--lengths", "6,6"], capsys
    )
    assert code == 0
    assert json.loads(out)["result"] == "contains"


def test_classify_cli(tmp_path, capsys):
    g6 = str(tmp_path / "c6.g6")
    run(["construct", "cycle:6", "--out", g6], capsys)
    code, out = run(
        [
            "classify", "--forbidden", g6, "--relation", "subgraph",
            "--parameter", "td", "--diameter", "3", "--json",
        ],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["answer"] == "Unbounded"
    assert payload["citation"] == "gq-polarity-c6-d3"


def test_census_cli(capsys):
    code, out = run(
        [
            "census", "--n-max", "4", "--forbidden", "clique:3",
            "--relation", "subgraph", "--diameter", "2",
        ],
        capsys,
    )
    assert code == 0
    assert out.splitlines()[0] == "n,count,max_width,witness_graph6"


def test_refute_cli(capsys):
    code, out = run(
        ["refute", "--r", "3", "--d", "2", "--length", "12"], capsys
    )
    assert code == 0
    assert json.loads(out)["status"] == "Refuted"


def test_convert_round_trip(tmp_path, capsys):
    el = tmp_path / "p3.el"
    el.write_text("3 2\n0 1\n1 2\n")
    g6 = str(tmp_path / "p3.g6")
    code, _ = run(
        ["convert", "--in", str(el), "--in-format", "edgelist",
         "--out", g6, "--out-format", "graph6"],
        capsys,
    )
    assert code == 0
    back = str(tmp_path / "back.el")
    run(
        ["convert", "--in", g6, "--in-format", "graph6",
         "--out", back, "--out-format", "edgelist"],
        capsys,
    )
    assert open(back).read() == el.read_text()


def test_malformed_graph6_is_usage_error(tmp_path, capsys):
    bad = tmp_path / "bad.g6"
    bad.write_text("C\n")
    code, _ = run(["width", "td", "--in", str(bad)], capsys)
    assert code == 2


def test_unknown_theorem_key_is_usage_error(capsys):
    assert run(["verify-theorem", "nonexistent"], capsys)[0] == 2


def test_verify_theorem_cli(capsys):
    code, out = run(["verify-theorem", "thm17-gadget"], capsys)
    assert code == 0
    assert json.loads(out)["passed"]


def test_experiment_cli(tmp_path, capsys):
    plan = tmp_path / "plan.json"
    plan.write_text(
        json.dumps(
            {
                "family_template": "er-polarity:{}",
                "values": [2, 3],
                "checks": [{"kind": "free", "pattern": "cycle:4", "expect": True}],
            }
        )
    )
    out_csv = str(tmp_path / "out.csv")
    code, _ = run(["experiment", "--plan", str(plan), "--out", out_csv], capsys)
    assert code == 0
    assert "free" in open(out_csv).read()
    # failing expectation exits 1
    plan.write_text(
        json.dumps(
            {
                "family_template": "path:{}",
                "values": [6],
                "checks": [{"kind": "diameter", "expect": 2}],
            }
        )
    )
    code, _ = run(["experiment", "--plan", str(plan)], capsys)
    assert code == 1


def test_determinism_byte_identical(tmp_path, capsys):
    a, b = str(tmp_path / "a.g6"), str(tmp_path / "b.g6")
    run(["construct", "gadget-ce:20,4", "--out", a], capsys)
    run(["--seed", "7", "construct", "gadget-ce:20,4", "--out", b], capsys)
    assert open(a).read() == open(b).read()
