import json

import pytest

from cliquecover.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_lcc_graph6(capsys):
    code, out, _ = run(capsys, "lcc", "Dhc", "--json")
    assert code == 0 and json.loads(out)["lcc"] == 2


def test_lcc_edge_file(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("4 3\n0 1\n0 2\n0 3\n")
    code, out, _ = run(capsys, "lcc", "--edges", str(f))
    assert code == 0 and out.splitlines()[0] == "3"


def test_bad_graph(capsys):
    code, _, err = run(capsys, "lcc", "D?")
    assert code == 2 and "malformed" in err


@pytest.mark.parametrize("method", ["alpha2", "max-clique", "local-alpha", "claw-free", "exact"])
def test_cover(capsys, method):
    code, out, _ = run(capsys, "cover", "--method", method, "Dhc")
    cert = json.loads(out)
    assert code == 0 and cert["verdict"] and cert["method"] == method.replace("-", "_")


def test_cover_precondition(capsys):
    code, _, err = run(capsys, "cover", "--method", "claw-free", "CF")
    assert code == 2 and "claw" in err


def test_check_exhaustive(capsys):
    code, out, err = run(capsys, "check", "--conjecture", "both", "--n", "4", "--exhaustive", "--quiet", "--no-cache")
    summary = json.loads(out.splitlines()[-1])
    assert code == 0 and summary["total"] == 64 and summary["violators"] == []
    assert "conj1_violations=0" in err


def test_check_violation_exit(capsys, tmp_path, monkeypatch):
    # forge a cache entry claiming lcc(K_3) = 5 so conjecture 2 appears violated
    cache = tmp_path / "c.jsonl"
    cache.write_text('{"g6":"Bw","lcc":5,"chi":3,"alpha":1,"omega":3}\n')
    monkeypatch.setenv("CLIQUECOVER_CACHE", str(cache))
    f = tmp_path / "in.g6"
    f.write_text("Bw\n")
    code, _, err = run(capsys, "check", "--conjecture", "2", "--input", str(f), "--quiet")
    assert code == 1 and "COUNTEREXAMPLE: Bw" in err


def test_report_csv(capsys, tmp_path):
    out = tmp_path / "r.csv"
    code, _, _ = run(capsys, "report", "--format", "csv", "--out", str(out), "--n", "3", "--exhaustive", "--no-cache")
    lines = out.read_text().splitlines()
    assert code == 0 and len(lines) == 10 and lines[0].startswith("graph6,n,lcc")


def test_check_random_sample(capsys):
    code, out, _ = run(capsys, "check", "--n", "6", "--samples", "25", "--seed", "1", "--quiet", "--no-cache")
    assert code == 0 and json.loads(out.splitlines()[-1])["total"] == 25


def test_suite(capsys):
    code, out, _ = run(capsys, "suite", "--method", "local-alpha", "--n", "4", "--exhaustive")
    s = json.loads(out)
    assert code == 0 and s["applied"] == s["passed"] == 64


@pytest.mark.parametrize("cmd,key", [("scp-bound", "realized_bound"), ("cp-bound", "realized_bound")])
def test_packing_commands(capsys, cmd, key):
    code, out, _ = run(capsys, cmd, "Dhc")
    js = json.loads(out)
    assert code == 0 and js["exact"]["sum"] <= js[key]
    if cmd == "scp-bound":
        assert js[key] == 20 and js["exact"]["sum"] == 20


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "Dhc")
    names = [v["bound"] for v in json.loads(out)]
    assert code == 0 and names == ["alpha_chi", "ratio", "corollary_alpha", "near_regular"]


def test_validate(capsys, tmp_path):
    f = tmp_path / "cover.json"
    f.write_text("[[0,1],[1,2],[2,3],[3,4]]")
    code, out, _ = run(capsys, "validate", "Dhc", "--cover", str(f))
    assert code == 1 and json.loads(out)["problem"] == "uncovered edge"
