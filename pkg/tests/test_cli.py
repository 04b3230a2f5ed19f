import subprocess
import sys

import pytest

from colebrook.cli import (
    EXIT_IO,
    EXIT_NONCONVERGED,
    EXIT_OK,
    EXIT_TABLE_MISMATCH,
    EXIT_USAGE,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def field(out, name):
    for line in out.splitlines():
        if line.startswith(name + " "):
            return line.split()[-1]
    raise KeyError(name)


def test_solve_fixed_newton(capsys):
    code, out, _ = run(capsys, "solve", "--re", "5e6", "--rr", "2.5e-5", "--method", "newton-x", "--start", "fixed-newton")
    assert code == EXIT_OK
    assert float(field(out, "lambda")) == pytest.approx(0.010279663295529, abs=1e-15)


def test_solve_three_point(capsys):
    code, out, _ = run(capsys, "solve", "--re", "3e4", "--rr", "9e-3", "--method", "3pt", "--start", "fixed-3pt")
    assert code == EXIT_OK
    assert float(field(out, "lambda")) == pytest.approx(0.038630738574792, abs=1e-15)


def test_solve_output_round_trips(capsys):
    _, out, _ = run(capsys, "solve", "--re", "5e6", "--rr", "2.5e-5")
    x = field(out, "x")
    assert len(x.replace(".", "")) == 15
    code, out, _ = run(capsys, "solve", "--re", "5e6", "--rr", "2.5e-5", "--start", f"value:{x}")
    assert code == EXIT_OK
    assert int(field(out, "iterations")) <= 1


def test_solve_trace_prints_table(capsys):
    code, out, _ = run(capsys, "solve", "--re", "5e6", "--rr", "2.5e-5", "--method", "halley-x", "--trace")
    assert code == EXIT_OK
    header = out.splitlines()[0].split()
    assert header[:2] == ["iter", "f"] and "fpp" in header


def test_non_convergence_exit(capsys):
    code, out, err = run(capsys, "solve", "--re", "5e6", "--rr", "2.5e-5", "--method", "fixed-point", "--max-iter", "1")
    assert code == EXIT_NONCONVERGED
    assert "no convergence" in err
    assert out.strip()


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "11"],
        ["solve", "--re", "abc", "--rr", "0"],
        ["solve", "--re", "5e6", "--rr", "1e-4", "--method", "bisection"],
        ["solve", "--re", "5e6", "--rr", "1e-4", "--start", "value:-3"],
        ["solve", "--re", "-5", "--rr", "1e-4"],
        ["sweep", "--map", "iteration", "--grid", "2by2", "--out", "x.csv"],
        ["lambertw", "--y", "10", "--z0", "-2"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_table_exit_codes(capsys, monkeypatch):
    code, out, _ = run(capsys, "table", "3")
    assert code == EXIT_OK and "MISMATCH" not in out
    assert run(capsys, "table", "10")[0] == EXIT_OK

    import colebrook.cli as cli
    from colebrook.tables import TableReport

    monkeypatch.setattr(cli, "replay_table", lambda t: TableReport(t, [], [("case", 3, 4)]))
    code, _, err = run(capsys, "table", "3")
    assert code == EXIT_TABLE_MISMATCH
    assert "3 printed, 4 replayed" in err


def test_sweep_writes_csv_and_summary(capsys, tmp_path):
    out = tmp_path / "tiny.csv"
    code, text, _ = run(capsys, "sweep", "--map", "error", "--estimator", "approx:0", "--grid", "2x2", "--out", str(out), "--jobs", "1")
    assert code == EXIT_OK
    assert len(out.read_text().splitlines()) == 5
    assert (tmp_path / "tiny.json").exists()
    assert "RelativeErrorPct n=4" in text


def test_sweep_output_is_byte_stable(capsys, tmp_path):
    paths = []
    for name in ("a", "b"):
        out = tmp_path / f"{name}.csv"
        argv = ["sweep", "--map", "iteration", "--method", "halley-x", "--grid", "6x5", "--out", str(out), "--jobs", "2"]
        assert run(capsys, *argv)[0] == EXIT_OK
        paths.append(out)
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert paths[0].with_suffix(".json").read_bytes() == paths[1].with_suffix(".json").read_bytes()


def test_sweep_io_failure(capsys, tmp_path):
    out = tmp_path / "missing" / "dir" / "m.csv"
    code, _, err = run(capsys, "sweep", "--map", "error", "--grid", "2x2", "--out", str(out), "--jobs", "1")
    assert code == EXIT_IO
    assert "cannot write" in err


def test_approx(capsys):
    code, out, _ = run(capsys, "approx", "--re", "5e6", "--rr", "2.5e-5", "--level", "2")
    assert code == EXIT_OK
    assert float(field(out, "nabla")) == 199205.5
    assert float(field(out, "lambda")) == pytest.approx(0.010279663295529, rel=6.17e-4)
    assert "x[2]" in out


def test_lambertw(capsys):
    code, out, _ = run(capsys, "lambertw", "--re", "5e6", "--method", "newton")
    assert code == EXIT_OK
    assert int(field(out, "iterations")) == 8
    assert float(field(out, "W")) == pytest.approx(12.14835704, abs=5e-9)
    code, _, err = run(capsys, "lambertw", "--y", "45871560", "--method", "newton", "--z0", "8")
    assert code == EXIT_NONCONVERGED


def test_environment_overrides(capsys, monkeypatch):
    monkeypatch.setenv("COLEBROOK_MAXITER", "1")
    assert run(capsys, "solve", "--re", "5e6", "--rr", "2.5e-5", "--method", "fixed-point")[0] == EXIT_NONCONVERGED
    monkeypatch.delenv("COLEBROOK_MAXITER")
    monkeypatch.setenv("COLEBROOK_TOL", "1e-2")
    _, loose, _ = run(capsys, "solve", "--re", "5e6", "--rr", "2.5e-5", "--method", "fixed-point")
    monkeypatch.delenv("COLEBROOK_TOL")
    _, tight, _ = run(capsys, "solve", "--re", "5e6", "--rr", "2.5e-5", "--method", "fixed-point")
    assert int(field(loose, "iterations")) < int(field(tight, "iterations"))
    monkeypatch.setenv("COLEBROOK_TOL", "tight")
    assert run(capsys, "solve", "--re", "5e6", "--rr", "2.5e-5")[0] == EXIT_USAGE


def test_module_entry_point_exit_codes(tmp_path):
    def code(*argv):
        return subprocess.run([sys.executable, "-m", "colebrook", *argv], capture_output=True).returncode

    assert code("solve", "--re", "5e6", "--rr", "2.5e-5") == EXIT_OK
    assert code("table", "11") == EXIT_USAGE
    assert code("solve", "--re", "5e6", "--rr", "2.5e-5", "--max-iter", "1") == EXIT_NONCONVERGED
    assert code("sweep", "--map", "error", "--grid", "2x2", "--out", str(tmp_path / "no" / "m.csv")) == EXIT_IO
