"""Report rendering: a versioned JSON schema, a table view, and CSV.

The JSON document is the machine contract (docs/report-schema.md); all
rational values are serialized as strings, "154" or "645061600/3", so
no consumer ever rounds them.  Two runs of the same request produce
identical documents except for the elapsed-seconds field.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .checker import BatchResult, CheckReport, Witness

REPORT_FORMAT_VERSION = 1


def _frac(value: Fraction | None) -> str | None:
    if value is None:
        return None
    return str(value)


def _witness_to_dict(w: Witness) -> dict:
    return {
        "note": w.note,
        "slot": w.slot,
        "exponent": list(w.exponent) if w.exponent is not None else None,
        "value": _frac(w.value),
        "point": [str(x) for x in w.point] if w.point is not None else None,
    }


def report_to_dict(report: CheckReport) -> dict:
    return {
        "format-version": REPORT_FORMAT_VERSION,
        "label": report.label,
        "precision": report.precision,
        "ok": report.ok,
        "error": report.error,
        "config": None if report.config is None else
                  {"groups": [[list(v) for v in g]
                              for g in report.config.groups]},
        "d": report.d,
        "k0-count": report.k0_count,
        "dprime": [list(pair) for pair in report.dprime],
        "cone-counts": [list(pair) for pair in report.cone_counts],
        "checks": [
            {
                "name": o.name,
                "status": o.status,
                "detail": o.detail,
                "witnesses": [_witness_to_dict(w) for w in o.witnesses],
            }
            for o in report.outcomes
        ],
        "warnings": list(report.warnings),
        "elapsed-seconds": round(report.elapsed, 6),
    }


def batch_to_dict(batch: BatchResult) -> dict:
    return {
        "format-version": REPORT_FORMAT_VERSION,
        "summary": {
            "total": len(batch.reports),
            "passed": batch.passed,
            "failed": batch.failed,
            "invalid": batch.invalid,
        },
        "reports": [report_to_dict(r) for r in batch.reports],
    }


def render_json(data: CheckReport | BatchResult) -> str:
    if isinstance(data, BatchResult):
        payload = batch_to_dict(data)
    else:
        payload = report_to_dict(data)
    return json.dumps(payload, indent=2) + "\n"


def _one_table(report: CheckReport, out: list[str]) -> None:
    head = report.label or "(unlabeled)"
    out.append("%s  precision=%d" % (head, report.precision))
    if report.error is not None:
        out.append("  ERROR: %s" % report.error)
        return
    if report.d is not None:
        out.append("  bound d=%d covering %d exponents"
                   % (report.d, report.k0_count))
    for (slot, dp), (_, count) in zip(report.dprime, report.cone_counts):
        out.append("  slot %d: bound d'=%d covering %d exponents"
                   % (slot, dp, count))
    for o in report.outcomes:
        out.append("  %-22s %-4s %s" % (o.name, o.status.upper(), o.detail))
        for w in o.witnesses:
            parts = [w.note]
            if w.slot is not None:
                parts.append("slot %d" % w.slot)
            if w.exponent is not None:
                parts.append("exponent %s" % (w.exponent,))
            if w.value is not None:
                parts.append("value %s" % w.value)
            if w.point is not None:
                parts.append("at (%s)" % ", ".join(str(x) for x in w.point))
            out.append("      witness: %s" % "; ".join(parts))
    for warning in report.warnings:
        out.append("  warning: %s" % warning)
    out.append("  result: %s  (%.2fs)"
               % ("pass" if report.ok else "FAIL", report.elapsed))


def render_table(data: CheckReport | BatchResult) -> str:
    out: list[str] = []
    if isinstance(data, BatchResult):
        for report in data.reports:
            _one_table(report, out)
            out.append("")
        out.append(data.summary_line)
    else:
        _one_table(data, out)
    return "\n".join(out) + "\n"


_CSV_COLUMNS = ("label", "check", "status", "detail",
                "witness_note", "witness_slot", "witness_exponent",
                "witness_value", "witness_point")


def _csv_rows(report: CheckReport):
    if report.error is not None:
        yield (report.label, "", "error", report.error, "", "", "", "", "")
        return
    for o in report.outcomes:
        if not o.witnesses:
            yield (report.label, o.name, o.status, o.detail,
                   "", "", "", "", "")
            continue
        for w in o.witnesses:
            yield (report.label, o.name, o.status, o.detail, w.note,
                   "" if w.slot is None else w.slot,
                   "" if w.exponent is None else " ".join(map(str, w.exponent)),
                   "" if w.value is None else str(w.value),
                   "" if w.point is None else " ".join(map(str, w.point)))


def render_csv(data: CheckReport | BatchResult) -> str:
    reports = data.reports if isinstance(data, BatchResult) else (data,)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    for report in reports:
        for row in _csv_rows(report):
            writer.writerow(row)
    return buf.getvalue()


RENDERERS = {
    "report": render_json,
    "table": render_table,
    "csv": render_csv,
}


__all__ = ["REPORT_FORMAT_VERSION", "report_to_dict", "batch_to_dict",
           "render_json", "render_table", "render_csv", "RENDERERS"]
