"""Command line behavior: output text, formats, exit codes."""

from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

from orbitci.cli import main

# proper markings: A1 has 1, each rank-2 type (A2 B2 C2 G2) has 3
_RANK2_ROWS = 1 + 4 * 3
_RANK2_CONES = 5


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- degrees ---------------------------------------------------------------------


def test_degrees_a2(capsys):
    code, out, _ = _run(capsys, "degrees", "A2")
    assert code == 0
    assert "A2 degrees [2, 3] dim 8 dim_N 6 identity 5 = 3 + 2 ok" in out


def test_degrees_g2(capsys):
    code, out, _ = _run(capsys, "degrees", "G2")
    assert code == 0
    assert "G2 degrees [2, 6] dim 14 dim_N 12 identity 8 = 6 + 2 ok" in out


def test_degrees_bad_type(capsys):
    code, _, err = _run(capsys, "degrees", "Z9")
    assert code == 2
    assert "error:" in err


# --- ci-check --------------------------------------------------------------------


def test_ci_check_cone_exit_zero(capsys):
    code, out, _ = _run(capsys, "ci-check", "A1:0")
    assert code == 0
    assert "IsNilpotentCone" in out


def test_ci_check_negative_exit_one(capsys):
    code, out, _ = _run(capsys, "ci-check", "A4:0101")
    assert code == 1
    assert "NotCompleteIntersection" in out
    assert "singular-codim" in out


def test_ci_check_bad_marking(capsys):
    code, _, err = _run(capsys, "ci-check", "Z9:00")
    assert code == 2
    assert "error:" in err


def test_ci_check_missing_argument(capsys):
    code, _, err = _run(capsys, "ci-check")
    assert code == 2
    assert "error:" in err


def test_ci_check_json_schema(capsys):
    code, out, _ = _run(capsys, "ci-check", "C3:101", "--json")
    assert code == 1
    data = json.loads(out)
    assert set(data) == {"subject", "verdict", "reasons"}
    assert data["subject"] == {"type": "C", "rank": 3, "marking": "101"}
    assert [r["rule"] for r in data["reasons"]] == [
        "forced-quadrics", "sym2-standard-absent",
    ]


def test_ci_check_exceptional(capsys):
    code, out, _ = _run(capsys, "ci-check", "--exceptional", "G2", "--dim-orbit", "10")
    assert code == 1
    assert "all-trivial-reps" in out


def test_ci_check_exceptional_needs_dim(capsys):
    code, _, err = _run(capsys, "ci-check", "--exceptional", "G2")
    assert code == 2
    assert "dim-orbit" in err


# --- verify ----------------------------------------------------------------------


def test_verify_rank_one(capsys):
    code, out, _ = _run(capsys, "verify", "--max-rank", "1")
    assert code == 0
    assert "total 1" in out
    assert "verdict IsNilpotentCone: 1" in out


def test_verify_rank_two_table(capsys):
    code, out, _ = _run(capsys, "verify", "--max-rank", "2")
    assert code == 0
    assert f"total {_RANK2_ROWS}" in out
    assert f"verdict IsNilpotentCone: {_RANK2_CONES}" in out
    assert f"verdict NotCompleteIntersection: {_RANK2_ROWS - _RANK2_CONES}" in out


def test_verify_csv_format(capsys):
    code, out, _ = _run(capsys, "verify", "--max-rank", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["type", "rank", "marking", "dim_orbit", "codim",
                       "verdict", "first_rule"]
    assert len(rows) == 1 + _RANK2_ROWS
    cones = [r for r in rows[1:] if r[5] == "IsNilpotentCone"]
    assert all("1" not in r[2] for r in cones)


def test_verify_json_format(capsys):
    code, out, _ = _run(capsys, "verify", "--max-rank", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data) == _RANK2_ROWS
    assert set(data[0]) == {"type", "rank", "marking", "dim_orbit", "codim",
                            "verdict", "first_rule"}


def test_verify_rank_guard(capsys):
    code, _, err = _run(capsys, "verify", "--max-rank", "9")
    assert code == 2
    assert "allow-unvalidated-tables" in err


def test_verify_parallel_matches_serial(capsys):
    _, serial, _ = _run(capsys, "verify", "--max-rank", "3", "--format", "csv")
    code, parallel, _ = _run(capsys, "verify", "--max-rank", "3", "--format", "csv",
                             "--parallelism", "2")
    assert code == 0
    assert parallel == serial


# --- euler ----------------------------------------------------------------------


def test_euler_single_value(capsys):
    code, out, _ = _run(capsys, "euler", "--m", "7", "--deg", "2,3", "--t", "0")
    assert code == 0
    assert out.strip() == "chi(0) = 1"


def test_euler_range(capsys):
    code, out, _ = _run(capsys, "euler", "--m", "7", "--deg", "2,3", "--t=-2..0")
    assert code == 0
    assert out.splitlines() == ["chi(-2) = 0", "chi(-1) = 0", "chi(0) = 1"]


def test_euler_no_hypersurfaces(capsys):
    code, out, _ = _run(capsys, "euler", "--m", "2", "--t", "1")
    assert code == 0
    assert out.strip() == "chi(1) = 3"


def test_euler_too_many_degrees(capsys):
    code, _, err = _run(capsys, "euler", "--m", "2", "--deg", "2,2,2", "--t", "0")
    assert code == 2
    assert "error:" in err


# --- oracle ---------------------------------------------------------------------


def test_oracle_weights_json(capsys):
    code, out, _ = _run(capsys, "oracle", "weights")
    assert code == 0
    assert json.loads(out) == {"sl2-cone": 1, "sl2-open": 2, "sl2-square": 2}


def test_oracle_molien_json(capsys):
    code, out, _ = _run(capsys, "oracle", "molien")
    assert code == 0
    assert json.loads(out)["C2"] == [2, 4]


# --- dispatch -------------------------------------------------------------------


def test_unknown_subcommand(capsys):
    assert _run(capsys, "frobnicate")[0] == 2


def test_module_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "orbitci", "degrees", "A2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "A2 degrees [2, 3]" in proc.stdout
