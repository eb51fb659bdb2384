import json
import subprocess
import sys

import pytest

from qtheta.cli import DEFAULTS, load_config, run


def _run(argv, capsys):
    code = run(argv)
    out = capsys.readouterr()
    return code, json.loads(out.out) if out.out.strip() else None, out.err


def test_yangian_passes(capsys):
    code, rep, err = _run(["verify", "yangian", "--n", "1", "--height", "2"], capsys)
    assert code == 0 and err == ""
    assert set(rep) == {"suite", "params", "checks", "elapsed_ms"}
    assert rep["suite"] == "yangian"
    assert rep["params"] == {"n": 1, "node": None, "height": 2}
    for c in rep["checks"]:
        assert set(c) == {"name", "status", "detail", "residual_term_count"}
        assert c["status"] in ("pass", "fail")


def test_solve_gklo(capsys):
    code, rep, _ = _run(["solve", "gklo", "--n", "1", "--order", "2"], capsys)
    assert code == 0
    details = {c["name"]: c["detail"] for c in rep["checks"]}
    assert details["a[1,0]"] == "(-1/2)*xi[1,0]"


def test_failing_check_gives_exit_one(capsys):
    code, rep, err = _run(["verify", "theta-qaffine", "--depth", "3", "--degree-bound", "8"], capsys)
    assert code == 1
    assert "FAIL the two q-exponentials of Theta_1 commute modulo relations" in err
    failed = [c["name"] for c in rep["checks"] if c["status"] == "fail"]
    assert len(failed) == 2


@pytest.mark.parametrize("argv", [
    ["verify", "nope"],
    ["solve", "yangian"],
    ["verify", "yangian", "--n", "0"],
    ["verify", "yangian", "--n", "2", "--node", "3"],
    ["verify", "prefund", "--depth", "2"],
    ["frobnicate", "yangian"],
])
def test_usage_errors_exit_two(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        run(argv)
    assert exc.value.code == 2


def test_deterministic_reports(capsys):
    argv = ["verify", "prefund", "--depth", "6"]
    _, a, _ = _run(argv, capsys)
    _, b, _ = _run(argv, capsys)
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b


def test_config_file_and_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# small run\nn = 1\nheight = 2\ndegree-bound = 5\n")
    assert load_config(str(cfg)) == {"n": 1, "height": 2, "degree_bound": 5}
    code, rep, _ = _run(["verify", "yangian", "--config", str(cfg), "--height", "3"], capsys)
    assert code == 0
    assert rep["params"]["n"] == 1 and rep["params"]["height"] == 3


def test_bad_config_is_usage_error(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("colour = 3\n")
    with pytest.raises(SystemExit) as exc:
        run(["verify", "yangian", "--config", str(cfg)])
    assert exc.value.code == 2


def test_report_file(tmp_path, capsys):
    path = tmp_path / "out.json"
    code = run(["verify", "qaffine-roots", "--degree-bound", "4", "--report", str(path)])
    assert code == 0
    assert capsys.readouterr().out == ""
    rep = json.loads(path.read_text())
    assert rep["suite"] == "qaffine-roots"


def test_defaults():
    assert DEFAULTS["height"] == 4 and DEFAULTS["depth"] == 8
    assert DEFAULTS["order"] == 10 and DEFAULTS["degree_bound"] == 12


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "qtheta", "--help"], capture_output=True, text=True)
    assert out.returncode == 0
    assert "verify" in out.stdout
