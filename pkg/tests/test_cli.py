import subprocess
import sys

import pytest

from xyquench.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def data_rows(text):
    return [line for line in text.splitlines() if not line.startswith("#")]


def test_run_dynamics(capsys):
    code, out, _ = run(capsys, "run", "--j0", "0.5", "--t-max", "2", "--t-steps", "3",
                       "--observable", "concurrence_r1,magnetization")
    assert code == 0
    rows = data_rows(out)
    assert rows[0] == "t,concurrence_r1,magnetization"
    assert len(rows) == 4 and rows[1].startswith("0,")
    assert "# xyquench" in out and "j0=0.5" in out


def test_run_asymptotic(capsys):
    code, out, _ = run(capsys, "run", "--j0", "0.5", "--asymptotic", "--separation", "2",
                       "--observable", "concurrence,sx")
    assert code == 0
    assert data_rows(out)[0] == "concurrence,sx"


def test_kt_zero_and_positive(capsys):
    assert run(capsys, "run", "--kt", "0", "--asymptotic")[0] == 0
    assert run(capsys, "run", "--kt", "0.5", "--asymptotic")[0] == 0
    assert run(capsys, "run", "--kt", "-1", "--asymptotic")[0] == 1


def test_sweep_to_file(capsys, tmp_path):
    out = tmp_path / "s.csv"
    code, stdout, _ = run(capsys, "sweep", "--sweep-x", "lambda:0:2:3", "--sweep-y", "kt:0:1:2",
                          "--asymptotic", "--out", str(out))
    assert code == 0 and stdout == ""
    rows = data_rows(out.read_text())
    assert rows[0] == "lambda,kt,concurrence_r1" and len(rows) == 7


def test_sweep_time_axis(capsys):
    code, out, _ = run(capsys, "sweep", "--sweep-x", "t:0:4:5", "--j0", "0.5")
    assert code == 0 and len(data_rows(out)) == 6


@pytest.mark.parametrize(
    "argv",
    [
        ["run"],
        ["run", "--t-max", "1"],
        ["run", "--asymptotic", "--t-max", "1", "--t-steps", "3"],
        ["run", "--asymptotic", "--observable", "entropy"],
        ["run", "--asymptotic", "--n-spins", "5"],
        ["run", "--asymptotic", "--gamma", "2"],
        ["sweep", "--sweep-x", "bogus:0:1:3", "--asymptotic"],
        ["sweep", "--sweep-x", "lambda:0:1:3", "--h0", "0", "--h1", "0", "--asymptotic"],
        ["sweep", "--sweep-x", "j0:0:1:3"],
        ["sweep", "--sweep-x", "j0:0:1:3", "--asymptotic", "--time", "1"],
        ["reproduce", "99x"],
        ["oracle", "nope"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert err


def test_unknown_figure_lists_ids(capsys):
    _, _, err = run(capsys, "reproduce", "99x")
    assert "17b" in err and "1a" in err


def test_reproduce(capsys):
    code, out, _ = run(capsys, "reproduce", "4a", "--resolution", "4")
    assert code == 0
    assert data_rows(out)[0] == "j0,j1,concurrence_r1"
    assert "figure 4a" in out


def test_oracle_wootters(capsys):
    code, out, _ = run(capsys, "oracle", "wootters-xstate")
    assert code == 0 and "wootters-xstate: PASS" in out


def test_oracle_mode_propagator(capsys):
    code, out, _ = run(capsys, "oracle", "mode-propagator")
    assert code == 0 and "PASS" in out


def test_bit_identical(capsys):
    argv = ["sweep", "--sweep-x", "j0:0:3:7", "--sweep-y", "j1:0:3:5", "--asymptotic",
            "--observable", "concurrence_r1,concurrence_r2,sx"]
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first


def test_resource_error_exit(capsys, monkeypatch):
    import xyquench.cli as cli
    from xyquench.errors import ResourceError

    def boom(args):
        raise ResourceError("too big")

    monkeypatch.setitem(cli.COMMANDS, "run", boom)
    assert run(capsys, "run", "--asymptotic")[0] == 3


def test_numerical_error_exit(capsys, monkeypatch):
    import xyquench.cli as cli
    from xyquench.errors import NumericalConsistencyError

    def boom(args):
        raise NumericalConsistencyError("bad")

    monkeypatch.setitem(cli.COMMANDS, "run", boom)
    assert run(capsys, "run", "--asymptotic")[0] == 2


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "xyquench.cli", "run", "--asymptotic"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "concurrence_r1" in res.stdout
    res = subprocess.run([sys.executable, "-m", "xyquench.cli", "reproduce", "zz"],
                         capture_output=True, text=True)
    assert res.returncode == 1
