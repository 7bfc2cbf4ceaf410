from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from fockforge import cli
from fockforge.verify import Check, SuiteReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_k_quotient_text_and_json(capsys):
    code, out, _ = run(capsys, "compute", "k-quotient", "--k", "2", "--partition", "[2]")
    assert code == 0
    assert "core []" in out and "quotient ([1],[])" in out
    code, out, _ = run(capsys, "compute", "k-quotient", "--k", "2", "--partition", "[2]", "--json")
    data = json.loads(out)
    assert data["core"] == [] and data["quotient"] == [[1], []]


def test_k_core_csv_header(capsys):
    code, out, _ = run(capsys, "compute", "k-core", "--k", "3", "--partition", "[3,1]", "--csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["partition", "k", "core", "quotient"]
    assert rows[1][:2] == ["[3,1]", "3"]


def test_tangent_single_box(capsys):
    code, out, _ = run(capsys, "compute", "tangent", "--r", "1", "--n", "1", "--charges", "0")
    assert code == 0 and "t + t^-1" in out
    code, out, _ = run(capsys, "tangent", "--r", "1", "--n", "1", "--charges", "0", "--json")
    assert code == 0
    json.loads(out)


def test_tangent_arity_mismatch_is_usage_error(capsys):
    code, _, err = run(capsys, "compute", "tangent", "--r", "2", "--n", "1", "--charges", "0")
    assert code == 2 and "error" in err


def test_character_table(capsys):
    code, out, _ = run(capsys, "compute", "character", "--r", "2", "--charge", "0", "--max-energy", "4", "--csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["energy", "weight", "count"]
    totals: dict = {}
    for e, _w, c in rows[1:]:
        totals[int(e)] = totals.get(int(e), 0) + int(c)
    assert [totals[e] for e in range(5)] == [1, 4, 9, 20, 42]


def test_maya_round_trip(capsys):
    code, out, _ = run(capsys, "compute", "maya", "--partition", "[3,1]", "--charge", "1")
    assert "charge=1; wedge=[4,1]" in out
    code, out, _ = run(capsys, "compute", "maya", "--state", "charge=1; wedge=[4,1]")
    assert code == 0 and "[3,1]" in out


def test_g_map_power(capsys):
    code, out, _ = run(capsys, "compute", "g-map", "--k", "2", "--power", "4")
    assert code == 0
    assert out.strip() == "g(p_4) = 1*s([],[2]) - 1*s([],[1,1]) + 1*s([2],[]) - 1*s([1,1],[])"


def test_quotient_check(capsys):
    code, out, _ = run(capsys, "quotient-check", "--k", "3", "--max", "12", "--csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["k", "kn", "k_regular", "k_tuples", "characters_matched", "status"]
    assert [int(r[2]) for r in rows[1:]] == [1, 3, 9, 22, 51]
    assert all(r[5] == "PASS" for r in rows[1:])


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "k-core", "--k", "2", "--partition", "[1,2]"],
        ["compute", "k-core", "--k", "2", "--partition", "3,1"],
        ["verify", "signs", "--degree", "20"],
        ["verify", "nonsense"],
        ["compute", "nonsense"],
        ["compute", "k-core", "--k", "2"],
        ["verify", "signs", "--degree", "0"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("fockforge: error:")


def test_degree_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("FOCKFORGE_MAX_DEGREE", "3")
    code, _, _ = run(capsys, "verify", "signs", "--degree", "4")
    assert code == 2
    monkeypatch.setenv("FOCKFORGE_MAX_DEGREE", "x")
    code, _, _ = run(capsys, "verify", "signs", "--degree", "2")
    assert code == 2


def test_verify_small_suite_is_deterministic(capsys):
    argv = ["verify", "signs", "--degree", "3", "--json"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    data = json.loads(out1)
    assert data["ok"] and data["suites"][0]["suite"] == "signs"


def test_verify_level_k_reports_scalar(capsys):
    code, out, _ = run(capsys, "verify", "level-k", "--k", "2", "--degree", "8")
    assert code == 0
    for n in (1, 2, 3):
        assert f"n={n}: {2 * n}" in out


def test_failed_identity_exits_1(capsys, monkeypatch):
    bad = SuiteReport("fake", [Check("x = y", False, 1, "", "at the vacuum")])
    monkeypatch.setattr(cli, "run_suite", lambda name, cfg: [bad])
    code, out, _ = run(capsys, "verify", "signs", "--csv")
    assert code == 1
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["suite", "identity", "status", "checked", "value", "counterexample"]
    assert rows[1] == ["fake", "x = y", "FAIL", "1", "", "at the vacuum"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fockforge", "compute", "k-core", "--k", "2", "--partition", "[1]"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "core [1]" in proc.stdout
