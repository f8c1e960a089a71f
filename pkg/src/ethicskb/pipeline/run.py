"""End-to-end pipeline over a complete comparison bundle.

A bundle holds everything recorded for one subject paper: both datasets,
both labeling directions, the scope votes and the redundancy groupings.
``run_pipeline`` produces the full three-stage metrics table plus an audit
log of every per-item label decision.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from ethicskb.errors import ParseError
from ethicskb.observations.io import (
    hierarchy_check,
    load_dataset,
    load_grouping,
    load_mapping,
    load_votes,
)
from ethicskb.observations.model import (
    Dataset,
    MappingSet,
    RedundancyGrouping,
    ScopeVoteRecord,
    SourceSet,
)
from ethicskb.pipeline.config import MergeConfig
from ethicskb.pipeline.metrics import ComparisonRow, MetricsRow, compute_metrics
from ethicskb.pipeline.stages import (
    SideStage,
    Stage,
    merge_redundant,
    raw_stage,
    vote_stage,
)


@dataclass
class ComparisonBundle:
    """All recorded inputs for one subject paper."""

    name: str
    dataset_e: Dataset
    dataset_t: Dataset
    mapping_e: MappingSet  # primary E, labeled against T
    mapping_t: MappingSet  # primary T, labeled against E
    votes_e: list[ScopeVoteRecord] = field(default_factory=list)
    votes_t: list[ScopeVoteRecord] = field(default_factory=list)
    grouping_e: RedundancyGrouping | None = None
    grouping_t: RedundancyGrouping | None = None

    def dataset(self, side: SourceSet) -> Dataset:
        return self.dataset_e if side is SourceSet.EXPERT else self.dataset_t


@dataclass
class StageResult:
    """Both sides of one stage, with metrics and T/E comparison."""

    stage: Stage
    e: SideStage
    t: SideStage
    row_e: MetricsRow
    row_t: MetricsRow
    comparison: ComparisonRow


@dataclass
class MetricsTable:
    """The full three-stage result for one bundle."""

    bundle: str
    config: MergeConfig
    stages: list[StageResult]
    warnings: list[str] = field(default_factory=list)

    def stage(self, stage: Stage) -> StageResult:
        for result in self.stages:
            if result.stage is stage:
                return result
        raise KeyError(stage.value)

    def audit_entries(self) -> list[dict]:
        entries = []
        for result in self.stages:
            for side_stage in (result.e, result.t):
                for item in side_stage.items:
                    entries.append(
                        {
                            "stage": side_stage.stage.value,
                            "side": side_stage.side,
                            "items": list(item.ids),
                            "label": item.label.value,
                            "reason": item.reason,
                            "flagged": item.flagged,
                        }
                    )
        return entries


def run_pipeline(
    bundle: ComparisonBundle, config: MergeConfig | None = None
) -> MetricsTable:
    """Raw -> no out-of-scope -> no redundancy, for both sides."""
    config = config or MergeConfig()

    raw_e = raw_stage(bundle.mapping_e, bundle.dataset_e)
    raw_t = raw_stage(bundle.mapping_t, bundle.dataset_t)

    voted_mapping_e, voted_e = vote_stage(
        bundle.mapping_e, bundle.votes_e, bundle.dataset_e
    )
    voted_mapping_t, voted_t = vote_stage(
        bundle.mapping_t, bundle.votes_t, bundle.dataset_t
    )

    merged_e = merge_redundant(
        voted_mapping_e,
        bundle.grouping_e,
        config,
        bundle.dataset_e,
        secondary_size=len(bundle.dataset_t.active_items()),
    )
    merged_t = merge_redundant(
        voted_mapping_t,
        bundle.grouping_t,
        config,
        bundle.dataset_t,
        secondary_size=len(bundle.dataset_e.active_items()),
    )

    stages = []
    for stage, side_e, side_t in (
        (Stage.RAW, raw_e, raw_t),
        (Stage.NO_OUT_OF_SCOPE, voted_e, voted_t),
        (Stage.NO_REDUNDANCY, merged_e, merged_t),
    ):
        row_e, row_t, comparison = compute_metrics(
            side_e.counts, side_t.counts, config
        )
        stages.append(
            StageResult(
                stage=stage,
                e=side_e,
                t=side_t,
                row_e=row_e,
                row_t=row_t,
                comparison=comparison,
            )
        )

    warnings = []
    for dataset, mapping, grouping in (
        (bundle.dataset_e, voted_mapping_e, bundle.grouping_e),
        (bundle.dataset_t, voted_mapping_t, bundle.grouping_t),
    ):
        warnings.extend(hierarchy_check(dataset, mapping, grouping))

    return MetricsTable(
        bundle=bundle.name, config=config, stages=stages, warnings=warnings
    )


# Conventional file names inside a bundle directory. Votes and groupings
# are optional; a missing file means "none recorded".
BUNDLE_FILES = {
    "dataset_e": "dataset_e.json",
    "dataset_t": "dataset_t.json",
    "mapping_e": "mapping_e_to_t.json",
    "mapping_t": "mapping_t_to_e.json",
    "votes_e": "votes_e.json",
    "votes_t": "votes_t.json",
    "grouping_e": "grouping_e.json",
    "grouping_t": "grouping_t.json",
}


def load_bundle(directory: str | Path, name: str | None = None) -> ComparisonBundle:
    """Load a bundle directory laid out with the conventional file names."""
    directory = Path(directory)
    if not directory.is_dir():
        raise ParseError(f"bundle directory {directory} does not exist")

    def path_of(key: str) -> Path:
        return directory / BUNDLE_FILES[key]

    for required in ("dataset_e", "dataset_t", "mapping_e", "mapping_t"):
        if not path_of(required).is_file():
            raise ParseError(f"bundle {directory}: missing {BUNDLE_FILES[required]}")

    dataset_e = load_dataset(path_of("dataset_e"))
    dataset_t = load_dataset(path_of("dataset_t"))
    if dataset_e.source_set is not SourceSet.EXPERT:
        raise ParseError(f"{path_of('dataset_e')}: expected source_set 'E'")
    if dataset_t.source_set is not SourceSet.TOOL:
        raise ParseError(f"{path_of('dataset_t')}: expected source_set 'T'")

    mapping_e = load_mapping(path_of("mapping_e"), dataset_e, dataset_t)
    mapping_t = load_mapping(path_of("mapping_t"), dataset_t, dataset_e)

    votes_e = load_votes(path_of("votes_e"), dataset_e) if path_of("votes_e").is_file() else []
    votes_t = load_votes(path_of("votes_t"), dataset_t) if path_of("votes_t").is_file() else []
    grouping_e = (
        load_grouping(path_of("grouping_e"), dataset_e)
        if path_of("grouping_e").is_file()
        else None
    )
    grouping_t = (
        load_grouping(path_of("grouping_t"), dataset_t)
        if path_of("grouping_t").is_file()
        else None
    )

    return ComparisonBundle(
        name=name or directory.name,
        dataset_e=dataset_e,
        dataset_t=dataset_t,
        mapping_e=mapping_e,
        mapping_t=mapping_t,
        votes_e=votes_e,
        votes_t=votes_t,
        grouping_e=grouping_e,
        grouping_t=grouping_t,
    )
