"""Trace files: one JSON document per run, or CSV rows of records."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict
from typing import IO, List

from goodstein.grammar import render
from goodstein.sequence import Outcome, Trace, TraceRecord, schedule_from_json

COLUMNS = ["n", "base_before", "d", "base_after", "form", "shape", "digits10",
           "value", "ordinal_decreased"]

ASTRONOMICAL = "astronomical"


def _digits_out(x: float):
    return ASTRONOMICAL if math.isinf(x) else x


def _digits_in(x) -> float:
    return math.inf if x == ASTRONOMICAL else float(x)


def record_to_json(rec: TraceRecord) -> dict:
    out = asdict(rec)
    out["digits10"] = _digits_out(rec.digits10)
    if rec.value is None:
        del out["value"]
    return out


def record_from_json(obj: dict) -> TraceRecord:
    return TraceRecord(
        n=obj["n"], base_before=obj["base_before"], d=obj["d"],
        base_after=obj["base_after"], form=obj["form"], shape=obj["shape"],
        digits10=_digits_in(obj["digits10"]), value=obj.get("value"),
        ordinal_decreased=obj["ordinal_decreased"])


def trace_to_json(t: Trace) -> dict:
    return {
        "m": t.m,
        "start": render(t.start),
        "base0": t.base0,
        "schedule": t.schedule.to_json(),
        "digit_cap": t.digit_cap,
        "records": [record_to_json(r) for r in t.records],
        "outcome": t.outcome.to_json() if t.outcome else None,
    }


def write_json(t: Trace, fp: IO[str]) -> None:
    json.dump(trace_to_json(t), fp, indent=1)
    fp.write("\n")


def read_json(fp: IO[str]) -> dict:
    """Load a trace document; records come back as :class:`TraceRecord`."""
    doc = json.load(fp)
    doc["records"] = [record_from_json(r) for r in doc["records"]]
    doc["schedule"] = schedule_from_json(doc["schedule"])
    if doc.get("outcome"):
        doc["outcome"] = Outcome(doc["outcome"]["kind"], doc["outcome"]["step"])
    return doc


def write_csv(records: List[TraceRecord], fp: IO[str]) -> None:
    # form/shape/value are strings and so always quoted
    w = csv.writer(fp, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in records:
        w.writerow([r.n, r.base_before, r.d, r.base_after, r.form, r.shape,
                    _digits_out(r.digits10), r.value if r.value is not None else "",
                    "true" if r.ordinal_decreased else "false"])


def read_csv(fp: IO[str]) -> List[TraceRecord]:
    out = []
    for row in csv.DictReader(fp):
        out.append(TraceRecord(
            n=int(row["n"]), base_before=int(row["base_before"]), d=int(row["d"]),
            base_after=int(row["base_after"]), form=row["form"], shape=row["shape"],
            digits10=_digits_in(row["digits10"]), value=row["value"] or None,
            ordinal_decreased=row["ordinal_decreased"] == "true"))
    return out


def csv_text(records: List[TraceRecord]) -> str:
    buf = io.StringIO()
    write_csv(records, buf)
    return buf.getvalue()
