# -*- coding: utf-8 -*-

import csv

import pytest

from nmcg import cli
from nmcg.cli import Commands, build_parser
from nmcg.problems import PROBLEMS


def _header(path):
    with open(path, newline="") as fh:
        return next(csv.reader(fh))


def test_commands():
    assert Commands.values() == {"solve", "list-problems", "bench", "nmf"}


def test_list_problems(capsys):
    assert cli(argv=["list-problems"]) == 0
    out = capsys.readouterr().out
    for name in PROBLEMS:
        assert name in out
    assert "even n >= 2" in out


def test_solve_with_trace(tmp_path, capsys):
    trace = tmp_path / "trace.csv"
    code = cli(argv=["--log-level", "warning", "solve", "--problem", "fig1_demo", "--dim", "41",
                     "--trace", str(trace)])
    assert code == 0
    assert "converged" in capsys.readouterr().out
    assert _header(trace) == ["k", "f", "gnorm", "alpha", "eta", "beta", "flk", "Rk"]


def test_solve_options(capsys):
    code = cli(argv=["solve", "--problem", "extended_rosenbrock", "--dim", "10", "--eta-scheme", "amini",
                     "--omega", "0.4", "--tol", "1e-5", "--memory", "3"])
    assert code == 0
    assert "converged" in capsys.readouterr().out


def test_solve_uses_dotenv_values(capsys):
    code = cli({"NMCG_MAX_ITER": "1"}, ["solve", "--problem", "extended_rosenbrock", "--dim", "10"])
    assert code == 0
    assert "iteration_limit" in capsys.readouterr().out


def test_solve_invalid_dimension(capsys):
    assert cli(argv=["solve", "--problem", "extended_rosenbrock", "--dim", "11"]) == 1
    assert "odd n=11" in capsys.readouterr().out


def test_solve_invalid_omega(capsys):
    assert cli(argv=["solve", "--problem", "fig1_demo", "--omega", "1.5"]) == 1


def test_invalid_log_level(capsys):
    assert cli(argv=["--log-level", "bogus", "list-problems"]) == 1
    assert "BOGUS" in capsys.readouterr().out
    assert cli({"NMCG_LOG_LEVEL": "loud"}, ["list-problems"]) == 1


def test_unknown_problem_is_rejected():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["solve", "--problem", "nope"])


def test_bench(tmp_path, capsys):
    out, profiles = tmp_path / "runs.csv", tmp_path / "profiles.csv"
    code = cli(argv=["bench", "--solvers", "trig,amini", "--families", "fig1_demo,quadratic_qf1",
                     "--dims", "10,20", "--metrics", "iterations,time", "--out", str(out),
                     "--profiles", str(profiles), "--sequential-timing"])
    assert code == 0
    assert "trig: solved 4 of 4" in capsys.readouterr().out
    assert _header(out) == ["problem", "n", "solver", "status", "iters", "fevals", "gevals", "time"]
    assert _header(tmp_path / "profiles_iterations.csv") == ["solver", "tau", "p"]
    assert (tmp_path / "profiles_time.csv").exists()
    assert not (tmp_path / "profiles_function_evals.csv").exists()


def test_nmf(tmp_path, capsys):
    out = tmp_path / "nmf.csv"
    code = cli(argv=["nmf", "--m", "12", "--n", "8", "--rank", "2", "--seeds", "2", "--outer-cap", "10",
                     "--out", str(out)])
    assert code == 0
    assert "mean" in capsys.readouterr().out
    assert _header(out) == ["m", "n", "k", "seed", "iter", "niter", "pgn", "time", "error", "algorithm"]


def test_nmf_input_matrix(tmp_path, capsys):
    matrix = tmp_path / "v.csv"
    matrix.write_text("1,0,2\n0,3,1\n4,1,0\n")
    assert cli(argv=["nmf", "--input", str(matrix), "--rank", "2", "--seeds", "1", "--projected-stop"]) == 0
    assert cli(argv=["nmf", "--input", str(tmp_path / "missing.csv"), "--rank", "2"]) == 1


def test_nmf_stall_tolerance(tmp_path, capsys):
    out = tmp_path / "nmf.csv"
    code = cli(argv=["nmf", "--m", "12", "--n", "8", "--rank", "2", "--seeds", "1", "--stall-tol", "1",
                     "--out", str(out)])
    assert code == 0
    with open(out, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[1][4] == "1"
