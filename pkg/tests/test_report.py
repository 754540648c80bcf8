"""
Test the JSONL and CSV report writers.
"""

import io
import json

import pytest

from cliquebound.report import *
from cliquebound.harness import evaluate_graph, run_corpus
from cliquebound.summary import CampaignSummary, SCHEMA_VERSION
from cliquebound.types import BoundId, ReportFormat
from cliquebound.exceptions import ReportError


@pytest.fixture
def records(k5, petersen, c7):
    return [evaluate_graph(g, source=name) for name, g in (("k5", k5), ("petersen", petersen), ("c7", c7))]


def test_jsonl_round_trip(records, tmp_path):
    """
    Three records give three JSONL lines that parse back to equal records.
    """
    path = str(tmp_path / "report.jsonl")
    assert write_report(records, None, ReportFormat.JSONL, path) == 3

    with open(path) as f:
        lines = f.read().splitlines()
    assert len(lines) == 3
    assert read_jsonl(path) == records

    data = json.loads(lines[0])
    assert list(data)[:4] == ["schema_version", "source", "graph6", "n"]
    assert data["schema_version"] == SCHEMA_VERSION
    assert data["graph6"] == "D~{"


def test_jsonl_is_strict_json(records):
    f = io.StringIO()
    write_records(records, f)
    for line in f.getvalue().splitlines():
        assert "NaN" not in line and "Infinity" not in line
        json.loads(line)


def test_csv_report(records):
    f = io.StringIO()
    write_records(records, f, ReportFormat.CSV)
    rows = read_csv(f.getvalue())
    assert len(rows) == 3
    assert rows[1]["source"] == "petersen"
    assert float(rows[1]["conjecture1.value"]) == pytest.approx(1.59787, abs=1e-5)
    assert float(rows[1]["conjecture1.slack"]) == pytest.approx(2 - 1.59787, abs=1e-5)
    assert rows[1]["omega"] == "2"
    assert rows[1]["chi"] == ""


def test_csv_header_only_when_empty():
    f = io.StringIO()
    assert write_records([], f, ReportFormat.CSV) == 0
    lines = f.getvalue().splitlines()
    assert len(lines) == 1
    assert lines[0].split(",") == csv_header()


def test_csv_header():
    header = csv_header()
    assert header[:3] == ["source", "graph6", "n"]
    for id in BoundId:
        assert f"{id}.value" in header
        assert f"{id}.slack" in header
    assert len(header) == len(CSV_COLUMNS) + 2 * len(BoundId)


def test_summary_next_to_report(records, tmp_path):
    path = str(tmp_path / "report.jsonl")
    summary = CampaignSummary(campaign="corpus")
    for record in records:
        summary.add(record)

    write_report(records, summary, ReportFormat.JSONL, path)
    with open(summary_path(path)) as f:
        data = json.load(f)

    assert data["schema_version"] == SCHEMA_VERSION
    assert data["total"] == 3
    assert data["exit_code"] == 0
    assert data["omega_witnesses"] == 1
    assert data["omega_witness_examples"] == [records[2].graph6]


def test_summary_without_timing():
    f = io.StringIO()
    write_summary(CampaignSummary(), f, timing=False)
    data = json.loads(f.getvalue())
    assert "wall_time" not in data
    assert data["conjecture1_mean"] is None


def test_counterexamples_reload(tmp_path, petersen):
    """
    A counterexample file is a corpus the corpus campaign reads back.
    """
    summary = CampaignSummary(counterexamples=[evaluate_graph(petersen).graph6])
    path = str(tmp_path / "counterexamples.g6")
    assert write_counterexamples(summary, path) == 1

    result = run_corpus(path)
    assert len(result.records) == 1
    assert result.records[0].graph6 == summary.counterexamples[0]


def test_unwritable_path(records, tmp_path):
    with pytest.raises(ReportError):
        write_report(records, None, ReportFormat.JSONL, str(tmp_path / "missing" / "report.jsonl"))


def test_malformed_report(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"source": "x"}\nnot json\n')
    with pytest.raises(ReportError, match="line"):
        read_jsonl(str(path))
