import json
import subprocess
import sys

import pytest

from ptmsums.cli import main


def run(*args, env=None):
    proc = subprocess.run(
        [sys.executable, "-m", "ptmsums", *args], capture_output=True, text=True, env=env
    )
    return proc.returncode, proc.stdout, proc.stderr


@pytest.mark.parametrize(
    "args,out",
    [
        ("compute F --preset n --k 2 --m 2 --n 2", "4"),
        ("compute H --preset n --k 2 --m 1 --n 2", "3/2"),
        ("compute f --preset s2 --k 2 --m 3 --n 2", "6*x + 6"),
        ("compute F --preset n --k 2 --m 2 --n 2 --method bruteforce", "4"),
        ("compute H --preset n --k 2 --m 1 --n 2 --method closed", "3/2"),
        ("compute f --preset s2 --k 2 --m 3 --n 2 --method recurrence", "6*x + 6"),
        ("compute H --preset n --k 4 --d 2 --m 0 --n 3", "1"),
    ],
)
def test_compute(args, out, capsys):
    assert main(args.split()) == 0
    assert capsys.readouterr().out.strip() == out


def test_compute_json_table(capsys):
    assert main("compute F --preset s2 --max-n 2 --m 0 --json".split()) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows == [
        {"m": 0, "n": 0, "poly": "1"},
        {"m": 0, "n": 1, "poly": "0"},
        {"m": 1, "n": 1, "poly": "-1"},
        {"m": 0, "n": 2, "poly": "0"},
        {"m": 1, "n": 2, "poly": "0"},
        {"m": 2, "n": 2, "poly": "2"},
    ]


def test_compute_spec_file(tmp_path, capsys):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps({"k": 2, "dim": 2, "P": [["1", "0"], ["0", "2"]], "q": ["1", "1"]}))
    assert main(["compute", "F", "--spec", str(path), "--m", "1", "--n", "1"]) == 0
    assert capsys.readouterr().out.strip() == "-v1 - v2"
    path.write_text("{bad json")
    assert main(["compute", "F", "--spec", str(path), "--m", "1", "--n", "1"]) == 2


def test_partition(capsys):
    assert main("partition --k 2 --v 1 --n 3".split()) == 0
    assert json.loads(capsys.readouterr().out) == {"P": [0, 3, 5, 6], "Q": [1, 2, 4, 7], "verified_up_to_m": 2}
    assert main("partition --k 4 --n 3 --v 1,3".split()) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["P"]) == 32 and data["verified_up_to_m"] == 2


@pytest.mark.parametrize(
    "args",
    [
        "partition --k 3 --v 1 --n 2",
        "partition --k 4 --v 1,1 --n 2",
        "partition --k 4 --n 2",
        "compute F --preset n --k 4 --d 3 --m 1 --n 1",
        "compute F --preset n --m 1",
        "compute F --preset n --m 1 --n 1 --budget 0",
        "verify no-such-suite",
        "verify cor2 --jobs 0",
    ],
)
def test_usage_errors(args):
    assert main(args.split()) == 2


def test_argparse_errors_exit_2():
    code, _, err = run("compute", "G")
    assert code == 2 and "invalid choice" in err


def test_budget_exit_3_and_warning():
    code, out, err = run(*"compute F --preset n --m 30 --n 30 --method bruteforce".split())
    assert code == 3 and "budget" in err
    code, out, err = run(*"compute F --preset n --m 2 --n 2 --budget 20000000".split())
    assert code == 0 and out.strip() == "4" and "warning" in err


def test_budget_env_var():
    import os

    env = dict(os.environ, PTMSUMS_BUDGET="4")
    code, _, _ = run(*"compute F --preset n --m 3 --n 3 --method bruteforce".split(), env=env)
    assert code == 3


def test_verify_examples(capsys):
    assert main("verify cor2 --n 6".split()) == 0
    assert capsys.readouterr().out.splitlines()[0] == "cor2: verified (7 cases)"
    assert main("verify product-identity --k 3 --n 3".split()) == 0
    assert "product-identity: verified" in capsys.readouterr().out
    assert main("verify prouhet-partition --k 4 --v 1,3 --n 3 --json".split()) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["status"] == "verified" and rep["elapsed_ms"] == 0


def test_verify_timing_flag(capsys):
    assert main("verify stirling --max-n 2 --json --timing".split()) == 0
    assert isinstance(json.loads(capsys.readouterr().out)["elapsed_ms"], int)


def test_conjecture_sweeps(capsys):
    assert main("conjecture 3 --max-total 64".split()) == 0
    reports = json.loads(capsys.readouterr().out)
    assert reports and all(r["status"] == "verified" for r in reports)
    assert {(r["params"]["m"], r["params"]["n"]) for r in reports} >= {(1, 6), (2, 3)}
    assert main("conjecture 1 --max-total 32".split()) == 0
    capsys.readouterr()
    assert main("conjecture 2 --k 3 --max-total 27".split()) == 0
    capsys.readouterr()


def test_conjecture_counterexample_exit_1(capsys):
    assert main("conjecture 3 --max-total 8 --max-parts 3".split()) == 1
    reports = json.loads(capsys.readouterr().out)
    bad = [r for r in reports if r["status"] == "counterexample"]
    assert bad and bad[0]["params"] == {"m": 3, "n": 1}


def test_console_script_entry():
    code, out, _ = run("--help")
    assert code == 0
    for sub in ("compute", "verify", "partition", "conjecture"):
        assert sub in out
