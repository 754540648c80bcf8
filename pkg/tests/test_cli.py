"""
Test the command line interface and its exit codes.
"""

import json

import pytest

from cliquebound.__main__ import main, build_parser, load_config
from cliquebound.types import Eigensolver, Keep


def run(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    return exc.value.code


def test_invariants_to_stdout(capsys):
    assert run(["invariants", "IheA@GUAo"]) == 0
    out, err = capsys.readouterr()
    record = json.loads(out.splitlines()[0])
    assert record["n"] == 10
    assert record["omega"] == 2
    assert '"total": 1' in err


def test_check_corpus(corpus, tmp_path, capsys):
    out = str(tmp_path / "report.jsonl")
    assert run(["check", "--corpus", corpus, "--with-chi", "--out", out]) == 0

    with open(out) as f:
        records = [json.loads(line) for line in f]
    assert len(records) == 3
    assert [r["chi"] for r in records] == [5, 3, 3]

    with open(out + ".summary.json") as f:
        summary = json.load(f)
    assert summary["campaign"] == "corpus"
    assert summary["omega_witnesses"] == 1


def test_check_csv(corpus, tmp_path):
    out = str(tmp_path / "report.csv")
    assert run(["check", "--corpus", corpus, "--format", "csv", "--out", out]) == 0
    with open(out) as f:
        lines = f.read().splitlines()
    assert len(lines) == 4
    assert lines[0].startswith("source,graph6,n,m")


def test_sweep(tmp_path):
    out = str(tmp_path / "sweep.jsonl")
    assert run(["sweep", "--n-max", "4", "--out", out]) == 0
    with open(out + ".summary.json") as f:
        summary = json.load(f)
    assert summary["total"] == 75
    assert summary["violations"]["conjecture1"] == 0


def test_kneser(tmp_path):
    out = str(tmp_path / "kneser.jsonl")
    assert run(["kneser", "--p-min", "4", "--p-max", "7", "--out", out]) == 0
    with open(out + ".summary.json") as f:
        summary = json.load(f)
    assert [row["margin"] for row in summary["families"]] == [2, 11, 24, 41]


def test_gnp(tmp_path):
    out = str(tmp_path / "gnp.jsonl")
    argv = ["gnp", "--n", "10", "--p", "0.0", "--trials", "5", "--seed", "3", "--keep", "all", "--out", out]
    assert run(argv) == 0
    with open(out) as f:
        assert len(f.read().splitlines()) == 5


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--corpus", "missing.g6"],
        ["invariants", "not graph6!"],
        ["sweep", "--n-max", "9"],
        ["kneser", "--p-min", "3"],
        ["gnp", "--n", "10", "--p", "2", "--trials", "1", "--seed", "1"],
    ],
)
def test_input_errors_exit_2(argv, capsys):
    """
    Bad input exits 2 (skipped lines alone do not count as errors).
    """
    code = run(argv)
    if argv[0] == "invariants":
        assert code == 0
        assert '"skipped": 1' in capsys.readouterr().err
    else:
        assert code == 2


def test_usage_errors():
    assert run(["sweep"]) == 2
    assert run(["sweep", "--n-max", "0"]) == 2
    assert run(["check", "--corpus", "x.g6", "--format", "xml"]) == 2
    assert run([]) == 2


def test_counterexamples_flag(corpus, tmp_path):
    path = tmp_path / "counterexamples.g6"
    assert run(["check", "--corpus", corpus, "--out", str(tmp_path / "r.jsonl"),
                "--counterexamples", str(path)]) == 0
    assert path.read_text() == ""


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("CLIQUEBOUND_WORKERS", "3")
    monkeypatch.setenv("CLIQUEBOUND_TOL_ZERO", "1e-9")
    monkeypatch.setenv("CLIQUEBOUND_NODE_BUDGET", "500")

    args = build_parser().parse_args(["sweep", "--n-max", "3", "--eigensolver", "lapack", "--keep", "all"])
    config = load_config(args)
    assert config["campaign"]["workers"] == 3
    assert config["tolerances"]["zero_eig_tol"] == 1e-9
    assert config["tolerances"].solver == Eigensolver.LAPACK
    assert config["solver"]["node_budget"] == 500
    assert Keep(config["campaign"]["keep"]) == Keep.ALL


def test_environment_mirrors_flags(monkeypatch):
    """
    Every option flag, including the switches, can be set from the environment.
    """
    monkeypatch.setenv("CLIQUEBOUND_EIGENSOLVER", "lapack")
    monkeypatch.setenv("CLIQUEBOUND_WITH_CHI", "1")
    monkeypatch.setenv("CLIQUEBOUND_KEEP", "all")
    monkeypatch.setenv("CLIQUEBOUND_PROGRESS", "yes")

    config = load_config(build_parser().parse_args(["sweep", "--n-max", "3"]))
    assert config["tolerances"].solver == Eigensolver.LAPACK
    assert config["solver"]["with_chi"] is True
    assert Keep(config["campaign"]["keep"]) == Keep.ALL
    assert config["campaign"]["progress"] is True

    monkeypatch.setenv("CLIQUEBOUND_WITH_CHI", "0")
    args = build_parser().parse_args(["sweep", "--n-max", "3"])
    assert args.with_chi is False
    assert build_parser().parse_args(["sweep", "--n-max", "3", "--with-chi"]).with_chi is True


def test_config_file_and_flags(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("campaign:\n  workers: 4\nsolver:\n  with_chi: true\n")

    args = build_parser().parse_args(["sweep", "--n-max", "3", "--config", str(path), "--workers", "2"])
    config = load_config(args)
    assert config["campaign"]["workers"] == 2
    assert config["solver"]["with_chi"] is True
