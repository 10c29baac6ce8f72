import json
import os
import subprocess
import sys

import pytest

from bmrbwr.cli import main
from bmrbwr.harness import load_summaries, read_trace_csv


def _run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_run_writes_files(tmp_path, capsys):
    code, out, _ = _run(["run", "--problem", "sphere-2", "--algo", "bwr", "--runs", "3",
                         "--seed", "42", "--budget", "2000", "--out", str(tmp_path)], capsys)
    assert code == 0
    header, row = out.splitlines()[:2]
    for col in ("best", "median", "mean", "worst", "std", "FR", "MV", "SR", "MFE"):
        assert col in header
    assert row.startswith("sphere-2") and len(row.split()) == 11
    s = load_summaries(tmp_path / "sphere-2_summary.json")[0]
    assert s.n_runs == 3 and s.base_seed == 42 and s.config["max_function_evaluations"] == 2000
    assert list(read_trace_csv(tmp_path / "sphere-2_convergence.csv")) == \
        ["bwr:42", "bwr:43", "bwr:44"]


def test_seed_fixes_bytes(tmp_path, capsys):
    outs = []
    for d in ("a", "b"):
        _run(["run", "--problem", "welded-beam", "--algo", "bmr,bwr", "--runs", "2",
              "--budget", "1000", "--seed", "5", "--out", str(tmp_path / d)], capsys)
        outs.append([(tmp_path / d / f).read_bytes()
                     for f in ("welded-beam_summary.json", "welded-beam_convergence.csv")])
    assert outs[0] == outs[1]


def test_unknown_problem(tmp_path, capsys):
    code, _, err = _run(["run", "--problem", "no-such", "--out", str(tmp_path)], capsys)
    assert code == 1 and "no-such" in err


def test_invalid_population(tmp_path, capsys):
    code, _, err = _run(["run", "--problem", "sphere-2", "--pop", "2", "--out", str(tmp_path)],
                        capsys)
    assert code == 2 and "population_size" in err
    assert not any(tmp_path.iterdir())


@pytest.mark.parametrize("argv", [["--algo", "pso"], ["--runs", "0"], ["--budget", "5"],
                                  ["--eq-tol", "-1"], ["--penalty-weight", "0"]])
def test_invalid_config(tmp_path, capsys, argv):
    code, _, _ = _run(["run", "--problem", "sphere-2", "--out", str(tmp_path)] + argv, capsys)
    assert code == 2


def test_config_precedence(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"population_size": 7, "max_function_evaluations": 70,
                               "n_runs": 2, "seed": 9}))
    _run(["run", "--problem", "booth", "--config", str(cfg), "--pop", "5",
          "--out", str(tmp_path)], capsys)
    s = load_summaries(tmp_path / "booth_summary.json")[0]
    assert s.config["population_size"] == 5
    assert s.config["max_function_evaluations"] == 70
    assert s.n_runs == 2 and s.base_seed == 9


def test_bad_config_file(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"population": 7}))
    assert _run(["run", "--problem", "booth", "--config", str(cfg)], capsys)[0] == 2


def test_problem_file(tmp_path, capsys):
    f = tmp_path / "p.txt"
    f.write_text("name: tiny\ndimension: 2\nlower: -1\nupper: 1\nobjective: x1^2 + x2^2\n"
                 "ineq: 0.5 - x1\nknown_best: 0.25\n")
    code, out, _ = _run(["run", "--problem-file", str(f), "--runs", "2", "--budget", "3000",
                         "--out", str(tmp_path / "o")], capsys)
    assert code == 0
    s = load_summaries(tmp_path / "o" / "tiny_summary.json")[0]
    assert s.FR == 100 and abs(s.best - 0.25) < 1e-3
    assert _run(["run", "--problem-file", str(tmp_path / "missing.txt")], capsys)[0] == 1


def test_env_output_dir(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("BMRBWR_OUT", str(tmp_path / "env"))
    _run(["run", "--problem", "booth", "--runs", "1", "--budget", "100"], capsys)
    assert (tmp_path / "env" / "booth_summary.json").exists()


def test_suite_engineering(tmp_path, capsys):
    code, out, _ = _run(["suite", "engineering-12", "--algo", "bmr,bwr", "--runs", "1",
                         "--budget", "200", "--out", str(tmp_path)], capsys)
    assert code == 0
    summaries = load_summaries(tmp_path / "engineering-12_summaries.json")
    assert len(summaries) == 24
    for algo in ("bmr", "bwr"):
        assert len(load_summaries(tmp_path / f"engineering-12_{algo}_summaries.json")) == 12
    assert len(out.splitlines()) == 25


def test_unknown_suite(tmp_path, capsys):
    assert _run(["suite", "cec-2020", "--out", str(tmp_path)], capsys)[0] == 1


def test_compare(tmp_path, capsys):
    _run(["suite", "engineering-12", "--algo", "bmr,bwr", "--runs", "1", "--budget", "200",
          "--out", str(tmp_path)], capsys)
    bwr = str(tmp_path / "engineering-12_bwr_summaries.json")
    code, out, _ = _run(["compare", bwr, bwr], capsys)
    assert code == 0
    rows = out.splitlines()[2:]
    assert len(rows) == 9 and all(r.split()[1:] == ["0", "12", "0", "100.00"] for r in rows)
    code, out, _ = _run(["compare", str(tmp_path / "engineering-12_summaries.json"),
                         "--a", "bwr", "--b", "bmr", "--criteria", "best,FR"], capsys)
    assert code == 0 and out.startswith("bwr vs bmr")


def test_compare_mismatch(tmp_path, capsys):
    for name in ("booth", "matyas"):
        _run(["run", "--problem", name, "--runs", "1", "--budget", "100",
              "--out", str(tmp_path)], capsys)
    code, _, err = _run(["compare", str(tmp_path / "booth_summary.json"),
                         str(tmp_path / "matyas_summary.json")], capsys)
    assert code == 1 and "differ" in err


def test_compare_missing_file(tmp_path, capsys):
    assert _run(["compare", str(tmp_path / "x.json"), str(tmp_path / "y.json")], capsys)[0] == 1


def test_plot(tmp_path, capsys):
    _run(["run", "--problem", "sphere-2", "--algo", "bmr,bwr", "--runs", "2", "--budget", "400",
          "--out", str(tmp_path)], capsys)
    csv_path = tmp_path / "sphere-2_convergence.csv"
    before = csv_path.read_bytes()
    code, out, _ = _run(["plot", str(csv_path), "--out", str(tmp_path / "fig"), "--log"], capsys)
    assert code == 0
    svg = (tmp_path / "fig" / "sphere-2_convergence.svg").read_text()
    assert svg.count("<polyline") == 2
    assert csv_path.read_bytes() == before


def test_plot_empty_csv(tmp_path, capsys):
    (tmp_path / "e.csv").write_text("")
    assert _run(["plot", str(tmp_path / "e.csv"), "--out", str(tmp_path)], capsys)[0] == 1
    assert _run(["plot", str(tmp_path / "none.csv"), "--out", str(tmp_path)], capsys)[0] == 1


def test_list(capsys):
    code, out, _ = _run(["list", "--suite", "engineering-12"], capsys)
    assert code == 0 and len(out.split()) == 12
    code, out, _ = _run(["list"], capsys)
    assert "sphere" in out.split()


def test_console_entry_point(tmp_path):
    env = dict(os.environ, BMRBWR_OUT=str(tmp_path))
    proc = subprocess.run([sys.executable, "-m", "bmrbwr.cli", "run", "--problem", "no-such"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 1
    proc = subprocess.run([sys.executable, "-m", "bmrbwr.cli", "list"], capture_output=True,
                          text=True, env=env)
    assert proc.returncode == 0 and "gear-train" in proc.stdout
