"""Label counting and the merge algebra for redundant groups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ethicskb.errors import EmptyGroupLabels
from ethicskb.observations.model import MappingLabel


@dataclass(frozen=True)
class LabelCounts:
    """How many items carry each label kind."""

    unique: int = 0
    plus_alpha: int = 0
    shared: int = 0
    out_of_scope: int = 0

    @property
    def in_scope(self) -> int:
        return self.unique + self.plus_alpha + self.shared

    @property
    def total(self) -> int:
        return self.in_scope + self.out_of_scope

    @classmethod
    def from_labels(cls, labels: Iterable[MappingLabel]) -> "LabelCounts":
        tally = {label: 0 for label in MappingLabel}
        for label in labels:
            tally[label] += 1
        return cls(
            unique=tally[MappingLabel.UNIQUE],
            plus_alpha=tally[MappingLabel.PLUS_ALPHA],
            shared=tally[MappingLabel.SHARED],
            out_of_scope=tally[MappingLabel.OUT_OF_SCOPE],
        )

    def as_dict(self) -> dict[str, int]:
        return {
            "unique": self.unique,
            "plus_alpha": self.plus_alpha,
            "shared": self.shared,
            "out_of_scope": self.out_of_scope,
        }


def group_label(labels: Iterable[MappingLabel]) -> MappingLabel:
    """Resolve the labels of a redundant group to one final label.

    Permutation-invariant over the whole multiset (the pairwise algebra is
    not associative, so this is deliberately not a fold):

    1. any plus_alpha present            -> plus_alpha
    2. else unique and shared both present -> plus_alpha
       (a point-scoring contribution that still overlaps the secondary set)
    3. else any shared present           -> shared
    4. else any out_of_scope present     -> out_of_scope
    5. else                              -> unique
    """
    present = set(labels)
    if not present:
        raise EmptyGroupLabels("a group resolved to an empty label multiset")
    if MappingLabel.PLUS_ALPHA in present:
        return MappingLabel.PLUS_ALPHA
    if MappingLabel.UNIQUE in present and MappingLabel.SHARED in present:
        return MappingLabel.PLUS_ALPHA
    if MappingLabel.SHARED in present:
        return MappingLabel.SHARED
    if MappingLabel.OUT_OF_SCOPE in present:
        return MappingLabel.OUT_OF_SCOPE
    return MappingLabel.UNIQUE
