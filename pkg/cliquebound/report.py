"""
Report writers and readers: JSONL record streams, CSV summary tables, the
campaign summary JSON and counterexample corpora.
"""

import io
import csv
import sys
import json
import logging

from contextlib import contextmanager
from typing import Iterable, List

from .serialize import dumps, finite
from .summary import CampaignSummary, GraphRecord
from .types import BoundId, ReportFormat
from .exceptions import ReportError


logger = logging.getLogger(__name__)

CSV_COLUMNS = [
    "source", "graph6", "n", "m", "d", "mu", "mu_min", "pi", "nu", "gamma",
    "s_plus", "s_minus", "t", "omega", "chi", "status", "violations",
]


def csv_header() -> List[str]:
    """
    The fixed record columns followed by a value and a slack column per bound,
    e.g. conjecture1.value and conjecture1.slack.
    """
    header = list(CSV_COLUMNS)
    for id in BoundId:
        header.extend((f"{id}.value", f"{id}.slack"))
    return header


def csv_row(record: GraphRecord) -> List:
    data = record.to_dict()
    row = []
    for column in CSV_COLUMNS:
        value = data[column]
        if column == "violations":
            value = ";".join(value)
        row.append(_cell(value))

    evaluations = {e.id: e for e in record.evaluations}
    for id in BoundId:
        e = evaluations.get(id)
        row.append(_cell(None if e is None else e.value))
        row.append(_cell(None if e is None else e.slack))
    return row


def _cell(value):
    value = finite(value)
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return value


@contextmanager
def _open(path):
    if hasattr(path, "write"):
        yield path
        return

    if path is None or path == "-":
        yield sys.stdout
        return

    try:
        f = open(path, "w", newline="")
    except OSError as e:
        raise ReportError(f"unable to write report to {path}: {e}") from e
    with f:
        yield f


def write_records(records: Iterable[GraphRecord], f, format: ReportFormat = ReportFormat.JSONL) -> int:
    """
    Writes records to an open text stream and returns how many were written.
    """
    count = 0
    if ReportFormat(format) == ReportFormat.CSV:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(csv_header())
        for record in records:
            writer.writerow(csv_row(record))
            count += 1
    else:
        for record in records:
            f.write(dumps(record.to_dict()))
            f.write("\n")
            count += 1
    return count


def write_report(
    records: Iterable[GraphRecord],
    summary: CampaignSummary = None,
    format: ReportFormat = ReportFormat.JSONL,
    path: str = None,
) -> int:
    """
    Writes the records as JSONL (one record per line, stable key order) or CSV
    to path, or to stdout when no path is given. An empty campaign produces an
    empty JSONL file or a header-only CSV.
    """
    with _open(path) as f:
        count = write_records(records, f, format)

    logger.debug(f"wrote {count} {format} records to {path or 'stdout'}")
    if summary is not None and path not in (None, "-"):
        write_summary(summary, summary_path(path))
    return count


def summary_path(path: str) -> str:
    return f"{path}.summary.json"


def write_summary(summary: CampaignSummary, path: str = None, timing: bool = True):
    """
    Writes the indented summary JSON to path (or an open stream), or stdout.
    """
    text = dumps(summary.to_dict(timing=timing), indent=2, separators=(",", ": "))
    with _open(path) as f:
        f.write(text)
        f.write("\n")


def write_counterexamples(summary: CampaignSummary, path: str) -> int:
    """
    Writes the confirmed counterexamples as a graph6 corpus that the corpus
    campaign reads back unchanged.
    """
    with _open(path) as f:
        for graph6 in summary.counterexamples:
            f.write(graph6)
            f.write("\n")

    if summary.counterexamples:
        logger.info(f"wrote {len(summary.counterexamples)} counterexamples to {path}")
    return len(summary.counterexamples)


def read_jsonl(path_or_stream) -> List[GraphRecord]:
    """
    Reads a JSONL report back into records.
    """
    if isinstance(path_or_stream, str):
        try:
            with open(path_or_stream, "r") as f:
                return read_jsonl(f)
        except OSError as e:
            raise ReportError(f"unable to read report {path_or_stream}: {e}") from e

    records = []
    for lineno, line in enumerate(path_or_stream, start=1):
        if not line.strip():
            continue
        try:
            records.append(GraphRecord.from_dict(json.loads(line)))
        except (ValueError, KeyError, TypeError) as e:
            raise ReportError(f"malformed report line {lineno}: {e}") from e
    return records


def read_csv(text: str) -> List[dict]:
    """
    Parses a CSV report into one dict per row, keyed by the header.
    """
    return list(csv.DictReader(io.StringIO(text)))
