"""Report serialisation: JSON lines or CSV, one record per graph plus a summary footer."""

from __future__ import annotations

import csv
import json
from typing import IO, Iterable

from .conjectures import ConjectureReport, Summary

CSV_COLUMNS = (
    "graph6",
    "n",
    "lcc",
    "lcc_complement",
    "chi",
    "conj1_lhs",
    "conj1_holds",
    "conj2_lhs",
    "conj2_holds",
    "equality2",
)
FORMATS = ("json-lines", "csv")


def _cell(x: object) -> str:
    return ("true" if x else "false") if isinstance(x, bool) else str(x)


def emit_report(
    reports: Iterable[ConjectureReport],
    fmt: str,
    sink: IO[str],
    summary: Summary | None = None,
) -> Summary:
    """Write every report to ``sink`` and finish with a footer of totals.

    ``summary`` is filled in as records stream past; pass one in to carry
    error records collected upstream.
    """
    if fmt not in FORMATS:
        raise ValueError(f"unknown report format {fmt!r}; expected one of {FORMATS}")
    summary = summary if summary is not None else Summary()
    if fmt == "csv":
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in reports:
            summary.add(r)
            row = r.row()
            writer.writerow([_cell(row[c]) for c in CSV_COLUMNS])
        totals = summary.as_dict()
        totals["violators"] = " ".join(totals["violators"])
        writer.writerow(["#summary"] + [f"{k}={_cell(v)}" for k, v in totals.items()])
    else:
        for r in reports:
            summary.add(r)
            sink.write(json.dumps(r.row(), separators=(",", ":")) + "\n")
        sink.write(json.dumps({"summary": summary.as_dict()}, separators=(",", ":")) + "\n")
    return summary
