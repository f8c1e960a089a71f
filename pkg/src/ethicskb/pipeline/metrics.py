"""Derived metrics for one stage: coverage, totals, efficiency, T/E ratios.

Identities that hold for every stage of every run:

* in_scope  = unique + plus_alpha + shared
* total     = in_scope + out_of_scope
* coverage  = weight_unique * unique + weight_plus_alpha * plus_alpha
  (with default weights this is the plain unique + plus_alpha count)
* efficiency = coverage / total, undefined (None) when total is 0
"""

from __future__ import annotations

from dataclasses import dataclass

from ethicskb.pipeline.config import MergeConfig
from ethicskb.pipeline.labels import LabelCounts
from ethicskb.pipeline.sigfig import gain_percent

RATIO_METRICS = ("in_scope", "out_of_scope", "total", "coverage", "efficiency")
GAIN_METRICS = ("coverage", "in_scope", "efficiency")


@dataclass(frozen=True)
class MetricsRow:
    """Counts plus derived values for one side at one stage."""

    counts: LabelCounts
    coverage: float
    efficiency: float | None

    @property
    def in_scope(self) -> int:
        return self.counts.in_scope

    @property
    def total(self) -> int:
        return self.counts.total

    def value(self, metric: str) -> float | None:
        if metric == "in_scope":
            return float(self.in_scope)
        if metric == "out_of_scope":
            return float(self.counts.out_of_scope)
        if metric == "total":
            return float(self.total)
        if metric == "coverage":
            return float(self.coverage)
        if metric == "efficiency":
            return self.efficiency
        raise KeyError(metric)


@dataclass(frozen=True)
class ComparisonRow:
    """T-over-E ratios and the gains implied by their rounded forms."""

    ratios: dict[str, float | None]
    gains: dict[str, int | None]


def build_row(counts: LabelCounts, config: MergeConfig) -> MetricsRow:
    coverage = (
        config.weight_unique * counts.unique
        + config.weight_plus_alpha * counts.plus_alpha
    )
    efficiency = coverage / counts.total if counts.total > 0 else None
    return MetricsRow(counts=counts, coverage=coverage, efficiency=efficiency)


def _ratio(t: float | None, e: float | None) -> float | None:
    if t is None or e is None or e == 0:
        return None
    return t / e


def compute_metrics(
    counts_e: LabelCounts, counts_t: LabelCounts, config: MergeConfig | None = None
) -> tuple[MetricsRow, MetricsRow, ComparisonRow]:
    """Rows for both sides plus their T/E comparison."""
    config = config or MergeConfig()
    row_e = build_row(counts_e, config)
    row_t = build_row(counts_t, config)
    ratios = {
        metric: _ratio(row_t.value(metric), row_e.value(metric))
        for metric in RATIO_METRICS
    }
    gains = {metric: gain_percent(ratios[metric]) for metric in GAIN_METRICS}
    return row_e, row_t, ComparisonRow(ratios=ratios, gains=gains)
