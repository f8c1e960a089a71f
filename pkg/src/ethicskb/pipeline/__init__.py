"""Three-stage comparison pipeline: raw, no out-of-scope, no redundancy."""

from ethicskb.pipeline.labels import LabelCounts, group_label
from ethicskb.pipeline.config import MergeConfig, resolve_broad_link_threshold
from ethicskb.pipeline.stages import (
    ResolvedItem,
    SideStage,
    Stage,
    apply_scope_votes,
    merge_redundant,
    raw_counts,
    raw_stage,
)
from ethicskb.pipeline.metrics import ComparisonRow, MetricsRow, compute_metrics
from ethicskb.pipeline.run import (
    ComparisonBundle,
    MetricsTable,
    StageResult,
    load_bundle,
    run_pipeline,
)
from ethicskb.pipeline.report import (
    format_count,
    format_table,
    format_two_sig,
    table_to_document,
)

__all__ = [
    "ComparisonBundle",
    "ComparisonRow",
    "LabelCounts",
    "MergeConfig",
    "MetricsRow",
    "MetricsTable",
    "ResolvedItem",
    "SideStage",
    "Stage",
    "StageResult",
    "apply_scope_votes",
    "compute_metrics",
    "format_count",
    "format_table",
    "format_two_sig",
    "group_label",
    "load_bundle",
    "merge_redundant",
    "raw_counts",
    "raw_stage",
    "resolve_broad_link_threshold",
    "run_pipeline",
    "table_to_document",
]
