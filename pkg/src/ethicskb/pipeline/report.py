"""Report rendering: plain-text table, CSV rows, JSON document.

Counts print as integers, ratios and efficiencies at two significant
figures (" .46", "1.4", "12"). In the text table a trailing ``*`` marks a
count cell that changed from the previous stage. All three formats are
deterministic: identical tables render to identical bytes.
"""

from __future__ import annotations

import csv
import io
import json

from ethicskb.pipeline.metrics import GAIN_METRICS, RATIO_METRICS
from ethicskb.pipeline.run import MetricsTable, StageResult
from ethicskb.pipeline.sigfig import format_count, format_two_sig

COUNT_METRICS = ("unique", "plus_alpha", "shared", "out_of_scope")
SIDE_METRICS = COUNT_METRICS + ("in_scope", "total", "coverage", "efficiency")

_ROW_LAYOUT = [
    # (metric, display label, has a T/E cell)
    ("in_scope", "in-scope", True),
    ("unique", "  unique", False),
    ("plus_alpha", "  plus-alpha", False),
    ("shared", "  shared", False),
    ("out_of_scope", "out-of-scope", True),
    ("total", "total", True),
    ("coverage", "coverage", True),
    ("efficiency", "%new", True),
]

_GAIN_LABELS = {
    "coverage": "coverage (unique + plus-alpha)",
    "in_scope": "in-scope (conservative)",
    "efficiency": "%new (efficiency)",
}


def _side_value(result: StageResult, side: str, metric: str):
    row = result.row_e if side == "E" else result.row_t
    if metric in COUNT_METRICS:
        return row.counts.as_dict()[metric]
    return row.value(metric)


def _format_side_value(metric: str, value) -> str:
    if value is None:
        return "-"
    if metric == "efficiency":
        return format_two_sig(value)
    return format_count(value)


def render_text(table: MetricsTable) -> str:
    label_width = 14
    cell = 6
    ratio_cell = 6

    lines = [f"Observation comparison: {table.bundle}", ""]

    group_width = 2 * cell + ratio_cell + 2
    header_groups = "".join(
        f" | {result.stage.display_name:^{group_width}}" for result in table.stages
    )
    lines.append(" " * label_width + header_groups)
    sub = "".join(
        f" | {'E':>{cell}}{'T':>{cell}}{'T/E':>{ratio_cell}}  " for _ in table.stages
    )
    lines.append(" " * label_width + sub.rstrip() + "  ")
    lines.append("-" * len(lines[-1]))

    for metric, label, has_ratio in _ROW_LAYOUT:
        parts = [f"{label:<{label_width}}"]
        for index, result in enumerate(table.stages):
            cells = []
            for side in ("E", "T"):
                value = _side_value(result, side, metric)
                text = _format_side_value(metric, value)
                if index > 0:
                    previous = _side_value(table.stages[index - 1], side, metric)
                    if previous != value:
                        text += "*"
                cells.append(f"{text:>{cell}}")
            if has_ratio:
                ratio = result.comparison.ratios[metric]
                ratio_text = format_two_sig(ratio) if ratio is not None else "-"
            else:
                ratio_text = ""
            cells.append(f"{ratio_text:>{ratio_cell}}  ")
            parts.append(" | " + "".join(cells))
        lines.append("".join(parts).rstrip() + "  ")

    final = table.stages[-1]
    lines.append("")
    lines.append(
        f"Gains at {final.stage.display_name} (T over E, from rounded ratios):"
    )
    for metric in GAIN_METRICS:
        gain = final.comparison.gains[metric]
        gain_text = f"{gain:+d}%" if gain is not None else "undefined"
        lines.append(f"  {_GAIN_LABELS[metric]:<32} {gain_text}")

    if table.warnings:
        lines.append("")
        lines.append("Warnings:")
        lines.extend(f"  {warning}" for warning in table.warnings)

    lines.append("")
    lines.append("* count changed from the previous stage")
    return "\n".join(lines) + "\n"


def render_csv(table: MetricsTable) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["bundle", "stage", "side", "metric", "value", "formatted"])
    for result in table.stages:
        stage = result.stage.value
        for side in ("E", "T"):
            for metric in SIDE_METRICS:
                value = _side_value(result, side, metric)
                writer.writerow(
                    [
                        table.bundle,
                        stage,
                        side,
                        metric,
                        "" if value is None else repr(float(value)),
                        _format_side_value(metric, value),
                    ]
                )
        for metric in RATIO_METRICS:
            ratio = result.comparison.ratios[metric]
            writer.writerow(
                [
                    table.bundle,
                    stage,
                    "T/E",
                    metric,
                    "" if ratio is None else repr(float(ratio)),
                    format_two_sig(ratio),
                ]
            )
        for metric in GAIN_METRICS:
            gain = result.comparison.gains[metric]
            writer.writerow(
                [
                    table.bundle,
                    stage,
                    "gain",
                    metric,
                    "" if gain is None else str(gain),
                    "" if gain is None else f"{gain:+d}%",
                ]
            )
    return buffer.getvalue()


def table_to_document(table: MetricsTable) -> dict:
    stages = []
    for result in table.stages:
        sides = {}
        for side, row in (("E", result.row_e), ("T", result.row_t)):
            sides[side] = {
                "counts": row.counts.as_dict(),
                "in_scope": row.in_scope,
                "total": row.total,
                "coverage": row.coverage,
                "efficiency": row.efficiency,
                "formatted": {
                    metric: _format_side_value(metric, _side_value(result, side, metric))
                    for metric in SIDE_METRICS
                },
            }
        stages.append(
            {
                "stage": result.stage.value,
                "display": result.stage.display_name,
                "sides": sides,
                "ratios": dict(result.comparison.ratios),
                "ratios_formatted": {
                    metric: format_two_sig(ratio) if ratio is not None else None
                    for metric, ratio in result.comparison.ratios.items()
                },
                "gains": dict(result.comparison.gains),
            }
        )
    return {
        "bundle": table.bundle,
        "config": {
            "broad_link_threshold": table.config.broad_link_threshold,
            "weight_unique": table.config.weight_unique,
            "weight_plus_alpha": table.config.weight_plus_alpha,
        },
        "stages": stages,
        "warnings": list(table.warnings),
        "audit": table.audit_entries(),
    }


def render_json(table: MetricsTable) -> str:
    return json.dumps(table_to_document(table), indent=2, ensure_ascii=False) + "\n"


def format_table(table: MetricsTable, fmt: str = "text") -> str:
    """Render a metrics table as 'text', 'csv' or 'json'."""
    if fmt == "text":
        return render_text(table)
    if fmt == "csv":
        return render_csv(table)
    if fmt == "json":
        return render_json(table)
    raise ValueError(f"unknown report format {fmt!r}")


# re-exported for callers that only need the number formatting
__all__ = [
    "format_count",
    "format_table",
    "format_two_sig",
    "render_csv",
    "render_json",
    "render_text",
    "table_to_document",
]
