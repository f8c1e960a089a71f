"""Observation datasets, mapping labels, scope votes, redundancy groups."""

from ethicskb.observations.model import (
    Dataset,
    MappingLabel,
    MappingRecord,
    MappingSet,
    ObservationItem,
    RedundancyGrouping,
    ScopeVoteRecord,
    SourceSet,
)
from ethicskb.observations.io import (
    dataset_from_document,
    dataset_to_csv,
    dataset_to_document,
    grouping_from_document,
    grouping_to_document,
    hierarchy_check,
    load_dataset,
    load_grouping,
    load_mapping,
    load_votes,
    mapping_from_document,
    mapping_to_document,
    votes_from_document,
    votes_to_document,
)

__all__ = [
    "Dataset",
    "MappingLabel",
    "MappingRecord",
    "MappingSet",
    "ObservationItem",
    "RedundancyGrouping",
    "ScopeVoteRecord",
    "SourceSet",
    "dataset_from_document",
    "dataset_to_csv",
    "dataset_to_document",
    "grouping_from_document",
    "grouping_to_document",
    "hierarchy_check",
    "load_dataset",
    "load_grouping",
    "load_mapping",
    "load_votes",
    "mapping_from_document",
    "mapping_to_document",
    "votes_from_document",
    "votes_to_document",
]
