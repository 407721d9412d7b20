import json
import subprocess
import sys

import pytest

from hamnodal import catalog
from hamnodal.cli import main, run
from hamnodal.core import GraphParams, GridFunction, load_function


def call(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, json.loads(out), err


def test_construct_supported(capsys, tmp_path):
    out = tmp_path / "f.json"
    code, doc, _ = call(capsys, "construct", "--n", "5", "--q", "2", "--i", "3", "--out", str(out))
    assert code == 0
    assert doc["snd"] == 2 and doc["eigenvalue"] == 6 and doc["route"] == "Q2Odd(1)"
    assert doc["courant"]["snd_bound_ok"] and doc["courant"]["wnd_bound_ok"]
    assert doc["provenance"]["recipe"]["route"] == ["Q2Odd(1)"]
    assert load_function(out) == catalog.construct_q2_odd(1)


def test_construct_unsupported(capsys):
    code, doc, _ = call(capsys, "construct", "--n", "4", "--q", "3", "--i", "4")
    assert code == 2
    assert doc["status"] == "unsupported" and doc["reason"] == "open case q=3, i=n"
    code, doc, _ = call(capsys, "construct", "--n", "3", "--q", "2", "--i", "2")
    assert code == 2 and "out of proven range" in doc["reason"]


def test_construct_verbose_goes_to_stderr(capsys):
    code, doc, err = call(capsys, "construct", "--n", "3", "--q", "4", "--i", "2", "--verbose")
    assert code == 0 and "route" in err and "SND=2" in err


def test_usage_errors(capsys):
    code = main(["construct", "--n", "3"])
    _, err = capsys.readouterr()
    assert code == 1 and "usage:" in err
    assert main(["frobnicate"]) == 1
    capsys.readouterr()
    assert main(["construct", "--n", "3", "--q", "2", "--i", "9"]) == 1
    capsys.readouterr()


def test_missing_file(capsys, tmp_path):
    code, doc, err = call(capsys, "snd", "--in", str(tmp_path / "nope.json"))
    assert code == 1 and "nope.json" in err


def test_verify_and_counts(capsys, tmp_path):
    path = tmp_path / "fig.json"
    small, _ = catalog.figure5_functions()
    path.write_text(small.dumps())
    code, doc, _ = call(capsys, "verify", "--in", str(path), "--lambda", "6")
    assert code == 0 and doc["is_eigenfunction"] and doc["snd"] == 3
    assert doc["courant"]["k"] == 6 and doc["courant"]["r"] == 4
    code, doc, _ = call(capsys, "verify", "--in", str(path), "--lambda", "3")
    assert not doc["is_eigenfunction"] and doc["courant"] is None
    code, doc, err = call(capsys, "snd", "--in", str(path), "--verbose")
    assert (doc["snd"], doc["positive"], doc["negative"]) == (3, 2, 1)
    assert doc["positive_components"][0] == [[0, 0]]
    assert err.startswith("+0:")
    code, doc, _ = call(capsys, "wnd", "--in", str(path))
    assert doc["wnd"] <= 3


def test_rational_values_accepted(capsys, tmp_path):
    path = tmp_path / "r.json"
    path.write_text(json.dumps({"n": 1, "q": 2, "values": ["1/2", "-1/2"]}))
    code, doc, _ = call(capsys, "verify", "--in", str(path), "--lambda", "2")
    assert code == 0 and doc["is_eigenfunction"] and doc["snd"] == 2


def test_bad_json(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 2, "q": 2, "values": ["1"]}))
    assert main(["snd", "--in", str(path)]) == 1
    capsys.readouterr()


def test_partition(capsys):
    code, doc, _ = call(capsys, "partition", "--type", "a", "--k", "1")
    assert code == 0 and doc["c1"] == [0, 7] and doc["quotient"] == [[0, 3], [1, 2]]
    code, doc, _ = call(capsys, "partition", "--type", "a", "--k", "1", "--translate", "1")
    assert doc["c1"] == [1, 6]
    code, doc, _ = call(capsys, "partition", "--type", "b", "--n", "2", "--q", "3")
    assert doc["c1"] == [0, 5, 7] and doc["quotient"] == [[0, 4], [2, 2]]
    code, doc, _ = call(capsys, "partition", "--type", "band", "--n", "2", "--q", "5")
    assert doc["quotient"] == [[2, 6], [4, 4]]
    code, doc, _ = call(capsys, "partition", "--type", "band", "--n", "2", "--q", "3")
    assert code == 1


def test_basis(capsys):
    code, doc, _ = call(capsys, "basis", "--n", "2", "--q", "3", "--i", "2")
    assert code == 0 and len(doc["basis"]) == 4
    assert doc["basis"][0] == {"n": 2, "q": 3, "values": ["1", "-1", "0", "-1", "1", "0", "0", "0", "0"]}


def test_search(capsys):
    code, doc, _ = call(capsys, "search", "--n", "2", "--q", "3", "--i", "2", "--mode", "exhaustive", "--range", "2")
    assert code == 0 and doc["best_snd"] == 3 and doc["label"] == "grid-exact"
    f = GridFunction.from_json(doc["certificate"])
    assert f.params == GraphParams(2, 3)
    code, doc, _ = call(capsys, "search", "--n", "3", "--q", "3", "--i", "3", "--samples", "64", "--seed", "2")
    assert doc["label"] == "evidence only" and doc["provenance"]["config"]["samples"] == 64
    code, doc, _ = call(capsys, "search", "--n", "3", "--q", "3", "--i", "3", "--mode", "exhaustive", "--range", "10")
    assert code == 1


def test_figure5(capsys):
    code, doc, _ = call(capsys, "figure5")
    assert code == 0
    assert [e["snd"] for e in doc["functions"]] == [3, 4]
    assert all(e["is_eigenfunction"] for e in doc["functions"])


def test_run_returns_outcome():
    outcome = run(["construct", "--n", "2", "--q", "3", "--i", "1"])
    assert outcome.status == "Ok" and outcome.exit_code == 0


def test_console_module():
    proc = subprocess.run([sys.executable, "-m", "hamnodal", "construct", "--n", "4", "--q", "3", "--i", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    assert json.loads(proc.stdout)["status"] == "unsupported"
