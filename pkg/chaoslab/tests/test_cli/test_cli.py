""" Tests for the command line interface"""
import os
import sys
sys.path.insert(1, os.path.join(os.path.dirname(os.path.abspath(__file__)), '..'))

import inspect
import json

import pytest

from chaoslab.cli import main
import chaoslab.defaults as default

print("=== tests_cli ===")

fiber_0 = '{"k": "1", "z": "0"}'
fiber_1 = '{"k": "1", "z": "1"}'


###############################################################################
################                MAIN TESTS
###############################################################################

def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["simulate", "--point", '{"k": "1", "z": "0.5"}'])
    assert err.value.code == 2
    assert main(["schedule", "--levels", "0"]) == 2
    assert main(["lemma1", "--samples", "0"]) == 2
    assert main(["simulate", "--point", fiber_0, "--point",
                 '{"k": "1", "phi": "0", "z": "1"}']) == 2
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_schedule_file(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["schedule", "--levels", "4", "--out", str(a)]) == 0
    assert main(["schedule", "--levels", "4", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    assert data["schema"] == default.schema_version
    assert data["fingerprint"].startswith("sha256:")
    assert data["config"]["levels"] == "4"
    assert "schedule with 4 levels" in capsys.readouterr().out
    # a later command reads the file and echoes its fingerprint
    out = tmp_path / "sim.json"
    assert main(["simulate", "--schedule", str(a), "--point", fiber_0,
                 "--steps", "10", "--format", "json", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["fingerprint"] == data["fingerprint"]
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_lemma1_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["lemma1", "--samples", "25", "--seed", "7", "--max-p", "1000000000"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    assert data["summary"]["violations"] == "0"
    assert len(data["samples"]) == 25
    c = tmp_path / "c.csv"
    assert main(args + ["--format", "csv", "--out", str(c)]) == 0
    lines = c.read_text().splitlines()
    assert lines[0] == "# approximate decimal values"
    # no schedule is involved, so there is no fingerprint line
    assert lines[3].startswith("theta_u,theta_v,r_u,r_v,delta,p,count")
    assert len(lines) == 4 + 25
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_simulate(tmp_path):
    out = tmp_path / "limit.csv"
    assert main(["simulate", "--levels", "3", "--steps", "100", "--out", str(out),
                 "--point", '{"k": "limit", "phi": "1/3", "z": "1/2"}']) == 0
    lines = [line for line in out.read_text().splitlines() if not line.startswith("#")]
    assert lines[0] == "i,k_u,phi_u,z_u"
    rows = lines[1:]
    assert len(rows) == 100
    assert len({row.split(",", 1)[1] for row in rows}) == 1

    out = tmp_path / "pair.json"
    assert main(["simulate", "--cap", "20", "--steps", "50", "--stride", "7",
                 "--format", "json", "--out", str(out),
                 "--point", fiber_0, "--point", fiber_1]) == 0
    data = json.loads(out.read_text())
    assert data["header"] == ["i", "k_u", "z_u", "k_v", "z_v", "distance"]
    assert [row[0] for row in data["rows"]] == [str(i) for i in range(0, 50, 7)]
    assert all(row[-1] == "1" for row in data["rows"])
    assert data["truncated"]
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_simulate_horizon():
    assert main(["simulate", "--levels", "2", "--steps", "100", "--point", fiber_0]) == 4
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_classify(tmp_path):
    out = tmp_path / "verdict.json"
    assert main(["classify", "--u", fiber_1, "--v", fiber_0, "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["verdict"]["classification"] == "NONE"
    assert data["verdict"]["phi_zero"] is True
    out = tmp_path / "verdict.csv"
    assert main(["classify", "--u", fiber_1, "--v", fiber_0, "--delta", "1/4",
                 "--format", "csv", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[-2] == "delta,phi_lower,phistar_upper"
    assert lines[-1] == "0.25,0,0"
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_certify(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["certify", "--mode", "factor-dc1", "--samples", "3", "--seed", "5"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    assert data["summary"]["endpoint_phi_zero"] is True
    assert data["summary"]["pairs_without_q_witness"] == []
    assert len(data["entries"]) == 4

    out = tmp_path / "extension.json"
    assert main(["certify", "--mode", "extension-nodc", "--samples", "4",
                 "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["summary"]["failed"] == []
    assert [e["case"]["case"] for e in data["entries"]] == ["A", "B", "C", "D"]
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_certify_lists_uncertified_bounds(tmp_path, capsys):
    out = tmp_path / "extension.json"
    assert main(["certify", "--mode", "extension-nodc", "--samples", "40",
                 "--out", str(out)]) == 0
    summary = json.loads(out.read_text())["summary"]
    uncertified = summary["uncertified"]
    assert len(uncertified) > 0
    assert int(summary["lemma_bound_holds"]) + len(uncertified) == int(summary["lemma_bounds"])
    for item in uncertified:
        assert item["case"] in ("B", "C")
        assert item["rigorous_regime"] is False
    assert summary["failed"] == []
    data = json.loads(out.read_text())
    for entry in data["entries"]:
        if "bounds" in entry:
            assert entry["certified"] == all(b["holds"] for b in entry["bounds"])
    assert "block bounds uncertified" in capsys.readouterr().out
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_certify_writes_json_only():
    with pytest.raises(SystemExit) as err:
        main(["certify", "--mode", "factor-dc1", "--format", "csv"])
    assert err.value.code == 2
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_certify_refuses_capped_schedule():
    assert main(["certify", "--mode", "factor-dc1", "--cap", "10", "--samples", "1"]) == 3
    print(f"{inspect.stack()[0][3]} passed")
    return True
