import json

import pytest

from critgraph.cli import main
from critgraph.corpus import corpus_dir


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def path(name):
    return str(corpus_dir() / f"{name}.json")


def test_alpha(capsys):
    code, out, _ = run(capsys, "alpha", path("c5"))
    data = json.loads(out)
    assert code == 0 and data["alpha"] == 2 and data["defect"] == 1
    assert len(data["max_stable_sets"]) == 5 and set(data["strengths"].values()) == {1}


def test_beta_and_subdefect(capsys):
    _, out, _ = run(capsys, "beta", path("k3"))
    assert json.loads(out)["beta"] == 1
    _, out, _ = run(capsys, "subdefect", path("k4"))
    assert json.loads(out) == {"subdefect": 2, "defect": 2}


def test_check(capsys):
    code, out, _ = run(capsys, "check", "fdg", path("k3"), "--oracle")
    data = json.loads(out)
    assert code == 0 and data["holds"] and data["oracle"]["tight_orders"] == 18
    assert data["oracle"]["rank"] == 15
    _, out, _ = run(capsys, "check", "alpha-critical", path("p4"), "--format", "text")
    assert out.strip() == "alpha-critical: no"


def test_inequality(capsys):
    _, out, _ = run(capsys, "inequality", path("k3"))
    data = json.loads(out)
    assert data["rhs"] == 1 and len(data["nodes"]) == 6
    assert data["coefficients"]["v1<v1'"] == 1 and data["coefficients"]["v1<v2'"] == -1


def test_gamma(capsys):
    _, out, _ = run(capsys, "gamma", path("c5"))
    assert json.loads(out)["gamma"] == 2


def test_transform(capsys):
    _, out, _ = run(capsys, "transform", "shrink-to-basis", path("c9"))
    assert len(json.loads(out)["vertices"]) == 3
    _, out, _ = run(capsys, "transform", "subdivide", path("k3"), "--edge", "v1,v2", "--length", "5")
    assert len(json.loads(out)["vertices"]) == 7
    code, _, err = run(capsys, "transform", "shrink", path("k3"), "--edge", "v1,v2")
    assert code == 2 and "outer neighbour" in err


def test_enumerate(capsys):
    _, out, _ = run(capsys, "enumerate", "--target", "fdg", "--defect", "1", "--max-n", "6")
    data = json.loads(out)
    assert data["summary"]["count"] == 1 and len(data["catalog"][0]["vertices"]) == 3


def test_dg(capsys):
    code, out, _ = run(capsys, "dg", "check", path("k4"), "--samples", "3")
    data = json.loads(out)
    assert code == 0 and data["holds"] and data["max_size"] <= 2
    _, out, _ = run(capsys, "dg", "build", path("k4"), "--format", "text")
    assert out.startswith("digraph") and "color=" in out


def test_lemma15(capsys):
    sets = json.dumps([["v1", "v2"], ["v3"], ["v1"], ["v2", "v3"]])
    _, out, _ = run(capsys, "lemma15", path("k3"), "--sets", sets)
    assert json.loads(out)["bound"] == 1


def test_analyze_and_corpus(capsys, tmp_path):
    code, out, _ = run(capsys, "analyze", path("c5"), "--format", "text")
    assert code == 0 and "violations: none" in out
    code, out, _ = run(capsys, "corpus")
    assert code == 0 and json.loads(out)["violations"] == []
    (tmp_path / "bad.json").write_text("[]")
    code, _, _ = run(capsys, "corpus", str(tmp_path))
    assert code == 2


def test_export_dot(capsys):
    _, out, _ = run(capsys, "export-dot", path("k3"))
    assert 'label="v1:1"' in out


def test_usage_errors(capsys, tmp_path):
    code, _, _ = run(capsys, "alpha", str(tmp_path / "missing.json"))
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nosuchcommand"])
    assert exc.value.code == 2


def test_max_n_override(capsys):
    code, _, err = run(capsys, "alpha", path("c9"), "--max-n", "5")
    assert code == 2 and "cap" in err


def test_max_n_override_does_not_leak(capsys):
    from critgraph.config import LIMITS

    before = LIMITS.enumerate_max_n
    run(capsys, "alpha", path("c9"), "--max-n", "5")
    assert LIMITS.enumerate_max_n == before
