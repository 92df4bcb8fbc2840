import json

import pytest

from flagcollapse.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


@pytest.fixture
def octa_file(tmp_path):
    p = tmp_path / "octa.txt"
    edges = [(u, v) for u in range(6) for v in range(u + 1, 6) if u // 2 != v // 2]
    p.write_text(f"6 {len(edges)}\n" + "\n".join(f"{u} {v}" for u, v in edges) + "\n")
    return p


def test_sample_edge_list_and_json(tmp_path, capsys):
    code, out = run(capsys, "sample", "--n", "30", "--alpha", "0.6", "--seed", "4", "--out", str(tmp_path / "g.txt"))
    assert code == 0 and out["n"] == 30
    code, out2 = run(capsys, "sample", "--n", "30", "--p", str(out["p"]), "--seed", "4", "--out", str(tmp_path / "g.json"))
    assert out2["edges"] == out["edges"]
    assert json.loads((tmp_path / "g.json").read_text())["n"] == 30


def test_check(octa_file, capsys):
    code, out = run(capsys, "check", "--in", str(octa_file), "--k", "1")
    assert code == 0 and out["status"] == "violated" and len(out["witness"]) == 8
    _, out = run(capsys, "check", "--in", str(octa_file), "--k", "1", "--mode", "prefilter")
    assert out["status"] == "inconclusive"
    _, out = run(capsys, "check", "--in", str(octa_file), "--k", "2")
    assert out["status"] == "satisfied"


def test_collapse_and_verify(octa_file, tmp_path, capsys):
    code, out = run(capsys, "collapse", "--in", str(octa_file), "--k", "1")
    assert code == 2 and out["status"] == "failure"
    cert = tmp_path / "cert.json"
    code, out = run(capsys, "collapse", "--in", str(octa_file), "--k", "2", "--cert-out", str(cert))
    assert code == 0 and out["status"] == "success"
    code, out = run(capsys, "verify", "--in", str(octa_file), "--cert", str(cert))
    assert code == 0 and out["pass"]
    bad = json.loads(cert.read_text())
    bad["fingerprint"] = "f" * 64
    cert.write_text(json.dumps(bad))
    code, out = run(capsys, "verify", "--in", str(octa_file), "--cert", str(cert))
    assert code == 1 and not out["pass"]


def test_homology(octa_file, capsys):
    code, out = run(capsys, "homology", "--in", str(octa_file))
    assert out == {"betti": [1, 0, 1], "torsion": [[], [], []], "euler": 2}


def test_experiment(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"k": 0, "alphas": [1.2], "ns": [40], "trials": 3, "master_seed": 1}))
    code, out = run(capsys, "experiment", "--config", str(cfg), "--out-dir", str(tmp_path / "out"), "--workers", "1")
    assert code == 0 and out[0]["trials"] == 3
    assert (tmp_path / "out" / "results.csv").exists()
