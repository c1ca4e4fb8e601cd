import json
import os
import subprocess
import sys

import pytest

from pvcmon.cli import main

C4_TEXT = "4 4\n0 1\n1 2\n2 3\n3 0\n"
P5_TEXT = "5 4\n0 1\n1 2\n2 3\n3 4\n"


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text(C4_TEXT)
    return str(path)


@pytest.fixture
def p5_file(tmp_path):
    path = tmp_path / "p5.txt"
    path.write_text(P5_TEXT)
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_pvc_auto(capsys, c4_file):
    code, report = run_cli(capsys, "pvc", c4_file, "-t", "2")
    assert code == 0
    assert report["result"]["size"] == 1
    assert report["input"] == {"n": 4, "m": 4}


def test_pvc_tree_solver(capsys, p5_file):
    code, report = run_cli(capsys, "pvc", p5_file, "-t", "4", "--solver", "tree")
    assert code == 0
    assert report["result"]["size"] == 2
    assert report["result"]["method"] == "tree_dp"


def test_pvc_zero_target(capsys, c4_file):
    code, report = run_cli(capsys, "pvc", c4_file, "-t", "0", "--solver", "exact")
    assert code == 0
    assert report["result"]["size"] == 0


def test_pvc_heuristic_is_flagged(capsys, c4_file):
    code, report = run_cli(capsys, "pvc", c4_file, "-t", "4", "--solver", "greedy")
    assert code == 0
    assert report["result"]["upper_bound"] is True


def test_smon(capsys, c4_file):
    code, report = run_cli(capsys, "smon", c4_file, "-t", "1")
    assert code == 0
    assert report["result"]["size"] == 1
    assert report["result"]["verified"] is True
    code, report = run_cli(capsys, "smon", c4_file, "-t", "2")
    assert code == 0
    assert report["result"]["size"] == 2


def test_smon_infeasible_exit_code(capsys, c4_file):
    code, _ = run_cli(capsys, "smon", c4_file, "-t", "5/2")
    assert code == 3


def test_sdyn_with_oracle(capsys, c4_file):
    code, report = run_cli(capsys, "sdyn", c4_file, "-t", "3/2", "--oracle")
    assert code == 0
    assert report["result"]["size"] == 1
    assert report["result"]["oracle"]["agrees"] is True
    code, report = run_cli(capsys, "sdyn", c4_file, "-t", "1")
    assert report["result"]["size"] == 0


def test_decimal_rational_rejected(capsys, c4_file):
    code, _ = run_cli(capsys, "smon", c4_file, "-t", "1.5")
    assert code == 2


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 1\n0 0\n")
    code, _ = run_cli(capsys, "pvc", str(bad), "-t", "0")
    assert code == 2


def test_missing_file_exit_code(capsys):
    code, _ = run_cli(capsys, "pvc", "/nonexistent/graph.txt", "-t", "0")
    assert code == 2


def test_simulate(capsys, tmp_path, c4_file):
    tau = tmp_path / "tau.txt"
    tau.write_text("2\n1\n1\n2\n")
    code, report = run_cli(capsys, "simulate", c4_file, str(tau), "--seed", "0")
    assert code == 0
    assert report["result"]["activated_all"] is True
    assert report["result"]["layers"][0] == [0]


def test_simulate_bad_thresholds(capsys, tmp_path, c4_file):
    tau = tmp_path / "tau.txt"
    tau.write_text("3\n0\n0\n0\n")  # above degree
    code, _ = run_cli(capsys, "simulate", c4_file, str(tau))
    assert code == 2


def test_reduce_writes_files(capsys, tmp_path, c4_file):
    out = tmp_path / "gadget"
    code, report = run_cli(
        capsys, "reduce", c4_file, "-k", "1", "-t", "2", "--rho", "1/2", "-o", str(out)
    )
    assert code == 0
    assert report["result"]["r"] == 25 and report["result"]["s"] == 21
    edge_text = (tmp_path / "gadget.edgelist").read_text()
    assert edge_text.startswith("63 63\n")
    meta = json.loads((tmp_path / "gadget.json").read_text())
    assert meta["rho"] == "1/2"


def test_verify_small_battery(capsys):
    code, report = run_cli(capsys, "verify", "lemma1", "--size-bound", "3")
    assert code == 0
    assert report["result"]["reports"][0]["passed"] is True


def test_payload_stability_excluding_timing(capsys, c4_file):
    code1, r1 = run_cli(capsys, "sdyn", c4_file, "-t", "3/2", "--oracle")
    code2, r2 = run_cli(capsys, "sdyn", c4_file, "-t", "3/2", "--oracle")
    assert code1 == code2 == 0
    r1.pop("elapsed_seconds")
    r2.pop("elapsed_seconds")
    assert json.dumps(r1, sort_keys=True) == json.dumps(r2, sort_keys=True)


def test_seed_order_flag(capsys, tmp_path):
    # unique minimum cover is {0, 3}; vertex 3 has the larger degree
    path = tmp_path / "g.txt"
    path.write_text("5 6\n0 1\n0 2\n0 3\n1 3\n2 3\n3 4\n")
    code, by_id = run_cli(capsys, "pvc", str(path), "-t", "6", "--solver", "exact")
    assert code == 0 and by_id["result"]["witness"] == [0, 3]
    code, by_deg = run_cli(
        capsys, "--seed-order", "degree", "pvc", str(path), "-t", "6", "--solver", "exact"
    )
    assert code == 0 and by_deg["result"]["witness"] == [3, 0]


def test_numpy_fallback_subprocess(tmp_path):
    graph = tmp_path / "c4.txt"
    graph.write_text(C4_TEXT)
    env = dict(os.environ, PVCMON_NUMBA="0")
    proc = subprocess.run(
        [sys.executable, "-m", "pvcmon.cli", "pvc", str(graph), "-t", "4", "--solver", "exact"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0, proc.stderr
    report = json.loads(proc.stdout)
    assert report["result"]["size"] == 2
    check = subprocess.run(
        [sys.executable, "-c", "from pvcmon import kernels; print(kernels.backend())"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert check.stdout.strip() == "numpy"
