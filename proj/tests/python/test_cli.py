import csv
import io
import json
import os
import subprocess

import pytest

CLI = os.environ.get("KOENIGS_CLI")
DATA = os.path.join(os.path.dirname(__file__), "..", "data")

pytestmark = pytest.mark.skipif(not CLI, reason="KOENIGS_CLI not set")


def run(*args, check=True):
    return subprocess.run([CLI, *args], capture_output=True, text=True, check=check)


def test_decide_strip():
    out = json.loads(run("decide", os.path.join(DATA, "strip.json")).stdout)
    assert out["schema"] == "koenigs-lab/v1"
    assert out["weak_star_complete"] == "yes"
    assert out["route"] == "thm-hyperbolic-(3)"


def test_decide_comb_cross_check():
    out = json.loads(run("decide", os.path.join(DATA, "comb.json"), "--cross-check").stdout)
    assert out["weak_star_complete"] == "no"
    assert out["cross_check"]["weak_star_complete"] == "no"
    assert out["witnesses"][0]["kind"] == "cantor_comb"


def test_output_is_deterministic():
    args = ("decide", os.path.join(DATA, "gap.json"), "--cross-check", "--seed", "5")
    assert run(*args).stdout == run(*args).stdout


def test_oracle_writes_pgm(tmp_path):
    pgm = tmp_path / "gap.pgm"
    out = json.loads(run("oracle", os.path.join(DATA, "gap.json"), "--resolution", "128", "--pgm", str(pgm)).stdout)
    assert out["components"] == 2 and out["int_closure_ok"] == "yes"
    assert pgm.read_bytes().startswith(b"P5")


def test_freq_csv(tmp_path):
    path = tmp_path / "f.csv"
    run("freq", "--domain", "half_plane", "--p", "2", "--grid=-1,0,0,0,2,1", "--csv", str(path))
    rows = list(csv.DictReader(path.open()))
    assert [r["status"] for r in rows] == ["member", "member"]


def test_approx_strip_csv():
    rows = list(csv.reader(io.StringIO(run("approx", "--demo", "strip", "--n", "64").stdout)))
    assert rows[0] == ["n", "sup_error", "uniform_bound"]
    assert float(rows[-1][1]) < float(rows[1][1])


def test_errors_and_strict(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"interval":[0,1],"pieces":[{"span":[0,1],"kind":"finite_analytic"}]}')
    r = run("classify", str(bad), check=False)
    assert r.returncode == 2 and "/pieces/0/expr" in r.stderr
    r = run("decide", os.path.join(DATA, "comb.json"), "--strict", check=False)
    assert r.returncode == 4  # the comb's H^p verdict is unknown
    r = run("oracle", os.path.join(DATA, "gap.json"), "--window=-1,-0.5,-1,3", check=False)
    assert r.returncode == 2 and "enlarge --window" in r.stderr
