"""Smoke tests: python module surface plus the CLI's CSV/exit-code contract.

The module import path and the CLI binary location come from the build tree:
ctest sets PYTHONPATH and QEMLAB_BIN; running pytest by hand works too if the
default build directory exists.
"""

import os
import pathlib
import subprocess

import pytest

import qemlab

REPO_ROOT = pathlib.Path(__file__).resolve().parents[2]


def cli_path():
    env = os.environ.get("QEMLAB_BIN")
    if env:
        return pathlib.Path(env)
    fallback = REPO_ROOT / "build" / "qemlab"
    if fallback.exists():
        return fallback
    pytest.skip("qemlab binary not found (set QEMLAB_BIN)")


def run_cli(*args, **kwargs):
    return subprocess.run(
        [str(cli_path()), *args], capture_output=True, text=True, timeout=300, **kwargs
    )


# ---- module surface ----------------------------------------------------------


def test_bound_arithmetic():
    b = qemlab.compute_bound("resample-perm", n=8, q=4)
    assert b == {"raw": 0.5, "value": 0.5, "vacuous": False}
    # 10 * 2^{-n/2} * (q_e sqrt(q_p) + q_p sqrt(q_e)) at n=16, q_e=4, q_p=16
    em = qemlab.compute_bound("em", n=16, q_e=4, q_p=16)
    assert em["raw"] == pytest.approx(10 * 2**-8 * (4 * 4 + 16 * 2))
    assert not em["vacuous"]
    vac = qemlab.compute_bound("em", n=8, q_e=16, q_p=16)
    assert vac["vacuous"] and vac["value"] == 1.0


def test_bound_rejects_unknown_id():
    with pytest.raises(ValueError):
        qemlab.compute_bound("no-such-bound")


def test_lemma_rows_deterministic():
    a = qemlab.lemma("resample-perm", 8, q=[1, 4], trials=500, seed=7)
    b = qemlab.lemma("resample-perm", 8, q=[1, 4], trials=500, seed=7)
    assert len(a) == 2
    for ra, rb in zip(a, b):
        ra.pop("wall_time_ms")
        rb.pop("wall_time_ms")
        assert ra == rb
    assert a[0]["bound"] == 0.25 and a[1]["bound"] == 0.5
    assert a[0]["advantage"] <= a[0]["bound"] + 2 * a[0]["ci_halfwidth"]


def test_reprogram_rows():
    rows = qemlab.lemma("reprogram", 6, trials=500, seed=3)
    names = [r["name"] for r in rows]
    assert names == ["reprogram-fixed-point", "reprogram-geometric", "reprogram-empty"]
    empty = rows[2]
    assert empty["bound"] == 0.0 and empty["advantage"] == 0.0
    with pytest.raises(ValueError):
        qemlab.lemma("reprogram", 6, q=[2], trials=10)


def test_attack_simon_recovers_keys():
    rows = qemlab.attack("simon-q2", 6, trials=20, seed=42)
    assert len(rows) == 1
    row = rows[0]
    assert row["p_world1"] >= 0.9
    assert row["experiment"] == "attack" and row["variant"] == "two-key"
    assert row["q_e"] == row["q_p"] > 0
    assert row["vacuous"]  # the security bound says nothing at toy sizes


def test_attack_n_cap():
    with pytest.raises(ValueError, match="simulator cap"):
        qemlab.attack("simon-q2", 40)


def test_sweep_grid_and_empty_grid():
    rows = qemlab.sweep(8, [1, 2], [4], trials=200, seed=5)
    assert [r["name"] for r in rows] == ["diff-1x4", "diff-2x4"]
    assert all(r["bound"] == 1.0 and r["vacuous"] for r in rows)
    with pytest.raises(ValueError, match="empty sweep grid"):
        qemlab.sweep(8, [], [], trials=10)


def test_hybrid_rows_shape():
    rows = qemlab.hybrid(3, j=1, primed=True, trials=2000, seed=11)
    names = [r["name"] for r in rows]
    assert names == [
        "tv-h0-real",
        "tv-htop-ideal",
        "tv-expt-hybrid-primed",
        "gap-stage",
        "gap-cut",
        "bad1-rate",
        "bad2-rate",
        "bad3-rate",
    ]
    assert rows[0]["j"] == 0 and rows[1]["j"] == 2 and rows[2]["j"] == 1
    assert rows[5]["bound"] == pytest.approx(1 / 8)  # j / 2^n


def test_acceptance_criterion_callable():
    assert qemlab.criterion_count() == 11
    outcome = qemlab.run_criterion(10)
    assert outcome["passed"], outcome["detail"]


# ---- CLI contract --------------------------------------------------------------


def strip_wall_time(csv_text):
    lines = csv_text.splitlines()
    out = []
    for line in lines:
        cols = line.split(",")
        assert len(cols) == 16
        del cols[14]
        out.append(",".join(cols))
    return out


def test_cli_lemma_example_bound():
    res = run_cli(
        "lemma", "--name", "resample-perm", "--n", "8", "--q", "4",
        "--trials", "1000", "--seed", "7",
    )
    assert res.returncode == 0
    header, row = res.stdout.splitlines()
    assert header == qemlab.csv_header()
    assert row.split(",")[12] == "0.5"


def test_cli_n_cap_exit_2():
    res = run_cli("attack", "--name", "simon-q2", "--n", "40")
    assert res.returncode == 2
    assert "n exceeds simulator cap" in res.stderr


def test_cli_deterministic_modulo_wall_time():
    args = ["sweep", "--n", "6", "--q-e", "1,2", "--q-p", "2", "--trials", "300", "--seed", "9"]
    a = run_cli(*args)
    b = run_cli(*args)
    assert a.returncode == 0 and b.returncode == 0
    assert strip_wall_time(a.stdout) == strip_wall_time(b.stdout)


def test_cli_empty_grid_exit_2():
    res = run_cli("sweep", "--n", "6", "--trials", "10")
    assert res.returncode == 2


def test_cli_unknown_name_exit_2():
    res = run_cli("attack", "--name", "nonesuch", "--n", "6")
    assert res.returncode == 2


def test_cli_lf_line_endings_and_out_file(tmp_path):
    out = tmp_path / "rows.csv"
    res = run_cli(
        "lemma", "--name", "resample-fn", "--n", "6", "--q", "0,1",
        "--trials", "200", "--seed", "2", "--out", str(out),
    )
    assert res.returncode == 0 and res.stdout == ""
    data = out.read_bytes()
    assert b"\r" not in data
    assert data.count(b"\n") == 3  # header + two rows, each LF-terminated
