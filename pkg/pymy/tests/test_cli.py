import os
import json
import pytest
import pymy.app.cli as cli
import pymy.app.verify

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")


def _golden(name):
    with open(os.path.join(DATA_DIR, "{0}.csv".format(name)), "r", newline="") as file:
        return file.read()


@pytest.mark.parametrize("name", ["my-ex1", "my-ex2", "cubic-ex1", "cubic-ex2"])
def test_table_matches_golden_file(name, capsys):
    assert cli.main(["--no-log", "table", name, "--format", "csv"]) == 0
    assert capsys.readouterr().out == _golden(name)


def test_table_text(capsys):
    assert cli.main(["--no-log", "table", "cubic-ex2"]) == 0
    out = capsys.readouterr().out
    assert "[beta]" in out
    assert "1.5320888863" in out


def test_eval_fixed_json(capsys):
    assert cli.main(["--no-log", "eval", "0.01", "--method", "fixed", "--tol", "1e-9", "--format", "json"]) == 0
    document = json.loads(capsys.readouterr().out)
    row = document["results"][0]["rows"][0]
    assert row["iterations"] == 5
    assert row["method"] == "FixedPoint"
    assert row["value"] == pytest.approx(0.1328694292, abs=2e-10)
    assert document["meta"]["command"] == "eval"


def test_eval_several_points(capsys):
    assert cli.main(["--no-log", "eval", "0.05", "1000", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "x,value,method,iterations,error_bound"
    assert lines[1].startswith("0.05,0.2795568")
    assert lines[2].startswith("1000.0,12.2745406201,ClosedRadical")


@pytest.mark.parametrize("method", ["closed", "fixed", "hyper", "oracle"])
def test_eval_methods_agree(method, capsys):
    assert cli.main(["--no-log", "eval", "2.5", "--method", method, "--format", "json"]) == 0
    value = json.loads(capsys.readouterr().out)["results"][0]["rows"][0]["value"]
    assert value == pytest.approx(1.433427663864, abs=1e-9)


def test_eval_fixed_iterations(capsys):
    assert cli.main(["--no-log", "eval", "0.01", "--method", "fixed", "--iterations", "2", "--format", "csv"]) == 0
    assert capsys.readouterr().out.splitlines()[1].startswith("0.01,0.1328687489,FixedPoint,2,")


def test_eval_domain_errors(capsys):
    assert cli.main(["--no-log", "eval", "-1"]) == 2
    assert cli.main(["--no-log", "eval", "nan"]) == 2
    assert cli.main(["--no-log", "eval", "1e-5", "--method", "hyper"]) == 2
    assert cli.main(["--no-log", "eval", "1", "--method", "fixed", "--tol", "1e-20"]) == 2
    assert capsys.readouterr().out == ""


def test_solve_depressed(capsys):
    assert cli.main(["--no-log", "solve", "--depressed", "-3", "1", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "method,case,label,root,double,residual"
    assert [line.split(",")[2] for line in lines[1:]] == ["gamma", "beta", "alpha"]
    assert lines[3].split(",")[3] == "1.5320888862"


def test_solve_both_methods(capsys):
    assert cli.main(["--no-log", "solve", "--depressed", "-3", "1", "--method", "both", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 7
    assert lines[4].startswith("viete,4,t2,")


def test_solve_general(capsys):
    assert cli.main(["--no-log", "solve", "--general", "1", "-6", "11", "-6", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)["results"][0]["rows"]
    assert [row["root"] for row in rows] == [pytest.approx(1.0), pytest.approx(2.0), pytest.approx(3.0)]


def test_solve_refine_and_iterations(capsys):
    args = ["--no-log", "solve", "--depressed", "1", "1", "--iterations", "1", "--refine", "--format", "json"]
    assert cli.main(args) == 0
    rows = json.loads(capsys.readouterr().out)["results"][0]["rows"]
    assert rows[0]["method"] == "fixed:1"
    assert rows[0]["root"] == pytest.approx(-0.682327803828019, abs=1e-10)


def test_solve_viete_needs_three_roots(capsys):
    assert cli.main(["--no-log", "solve", "--depressed", "1", "1", "--method", "viete"]) == 2
    # both falls back to the MY roots only
    assert cli.main(["--no-log", "solve", "--depressed", "1", "1", "--method", "both", "--format", "csv"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 2


def test_solve_domain_error():
    assert cli.main(["--no-log", "solve", "--general", "0", "1", "1", "1"]) == 2


def test_verify(capsys):
    assert cli.main(["--no-log", "verify", "--grid-points", "10"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == len(pymy.app.verify.SUITES)
    assert all(line.startswith("PASS ") for line in lines)


@pytest.mark.parametrize("x_min,x_max", [("1e-300", "1e-290"), ("1e290", "1e300")])
def test_verify_extreme_ranges_end_with_exit_code(x_min, x_max, capsys):
    args = ["--no-log", "verify", "--grid-points", "10", "--x-min", x_min, "--x-max", x_max]
    assert cli.main(args) in (0, 1)
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == len(pymy.app.verify.SUITES)


def test_arithmetic_errors_exit_2(monkeypatch, capsys):
    def overflow(self):
        raise OverflowError("(34, 'Numerical result out of range')")

    monkeypatch.setattr(pymy.app.verify.MyVerifier, "run", overflow)
    assert cli.main(["--no-log", "verify", "--grid-points", "10"]) == 2
    assert "Numerical error in verify" in capsys.readouterr().err


def test_verify_bad_grid():
    assert cli.main(["--no-log", "verify", "--grid-points", "5"]) == 2


def test_plot_data(capsys):
    assert cli.main(["--no-log", "plot-data", "--curve", "my", "--points", "5"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "x,my"
    assert len(lines) == 6
    assert lines[-1] == "1.0000000000,1.0000000000"


def test_usage_errors():
    assert cli.main(["--no-log", "table", "nope"]) == 2
    assert cli.main(["--no-log"]) == 2
    assert cli.main(["--no-log", "solve", "--depressed", "1"]) == 2
    assert cli.main(["--no-log", "solve", "--depressed", "1", "1", "--general", "1", "1", "1", "1"]) == 2


def test_version(capsys):
    assert cli.main(["--version"]) == 0
    assert "pymy 1.0.0" in capsys.readouterr().out
