"""Data model for observation datasets and their comparison artifacts.

An observation item is one identifiable ethics point. Two datasets are
compared per subject paper: the expert-critique side ("E") and the
tool/knowledge-base side ("T"). A mapping set labels every item of its
primary dataset against the other (secondary) dataset; scope votes and
redundancy groupings feed the later pipeline stages.

Input contract (not machine-checkable): items are maximally subdivided,
one observation per item. See docs/formats.md.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class SourceSet(Enum):
    """Which analysis produced a dataset: expert critique or KB tool."""

    EXPERT = "E"
    TOOL = "T"

    @property
    def other(self) -> "SourceSet":
        return SourceSet.TOOL if self is SourceSet.EXPERT else SourceSet.EXPERT


class MappingLabel(Enum):
    """Directed label of a primary item against the secondary set.

    unique:       in-scope, nothing in the secondary set corresponds to it.
    plus_alpha:   overlaps a secondary item but adds articulable value.
    shared:       difference from the secondary item cannot be articulated.
    out_of_scope: not an ethics observation at all.
    """

    UNIQUE = "unique"
    PLUS_ALPHA = "plus_alpha"
    SHARED = "shared"
    OUT_OF_SCOPE = "out_of_scope"

    @property
    def in_scope(self) -> bool:
        return self is not MappingLabel.OUT_OF_SCOPE

    @property
    def scores_point(self) -> bool:
        """True for the coverage labels (unique, plus_alpha)."""
        return self in (MappingLabel.UNIQUE, MappingLabel.PLUS_ALPHA)


@dataclass(frozen=True)
class ObservationItem:
    """One ethics observation. ``excluded`` removes it from all counts."""

    id: str
    source_set: SourceSet
    text: str
    kb_leaf_ref: str | None = None
    parent_id: str | None = None
    excluded: bool = False
    note: str | None = None


@dataclass
class Dataset:
    """All observation items one analysis produced for one subject paper."""

    name: str
    source_set: SourceSet
    subject_paper: str
    items: list[ObservationItem] = field(default_factory=list)

    def ids(self) -> set[str]:
        return {item.id for item in self.items}

    def active_items(self) -> list[ObservationItem]:
        return [item for item in self.items if not item.excluded]

    def get(self, item_id: str) -> ObservationItem | None:
        for item in self.items:
            if item.id == item_id:
                return item
        return None


@dataclass(frozen=True)
class MappingRecord:
    """Label for one primary item, with references into the secondary set.

    plus_alpha and shared require at least one secondary reference; unique
    requires none at all.
    """

    primary_item: str
    label: MappingLabel
    secondary_refs: tuple[str, ...] = ()
    rationale: str | None = None


@dataclass
class MappingSet:
    """One labeling direction: every primary item has exactly one record."""

    primary_set: SourceSet
    secondary_set: SourceSet
    records: dict[str, MappingRecord] = field(default_factory=dict)

    def label_of(self, item_id: str) -> MappingLabel:
        return self.records[item_id].label


@dataclass(frozen=True)
class ScopeVoteRecord:
    """Three independent in-scope judgements for one item (True = in-scope)."""

    item: str
    votes: tuple[bool, bool, bool]

    @property
    def majority_in_scope(self) -> bool:
        return sum(self.votes) >= 2


@dataclass
class RedundancyGrouping:
    """Groups of same-dataset items expressing one observation.

    Groups have at least two members; an item may appear in several groups
    (the merge stage then discounts its label).
    """

    dataset: SourceSet
    groups: list[list[str]] = field(default_factory=list)

    def membership_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for group in self.groups:
            for item_id in group:
                counts[item_id] = counts.get(item_id, 0) + 1
        return counts
