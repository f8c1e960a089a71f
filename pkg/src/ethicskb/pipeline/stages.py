"""The three scoring stages applied to one labeling direction.

Stage 1 (raw) tallies the labeler's labels as-is. Stage 2 (no
out-of-scope) folds in the three-rater scope votes. Stage 3 (no
redundancy) collapses each redundant group to a single synthetic item
whose label follows the merge algebra in :mod:`ethicskb.pipeline.labels`.

Every stage produces per-item resolved labels with a reason string, so a
full audit trail of label decisions survives into the report.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum

from ethicskb.errors import UnknownItem
from ethicskb.observations.model import (
    Dataset,
    MappingLabel,
    MappingSet,
    RedundancyGrouping,
    ScopeVoteRecord,
)
from ethicskb.pipeline.config import MergeConfig, resolve_broad_link_threshold
from ethicskb.pipeline.labels import LabelCounts, group_label


class Stage(Enum):
    RAW = "raw"
    NO_OUT_OF_SCOPE = "no_out_of_scope"
    NO_REDUNDANCY = "no_redundancy"

    @property
    def display_name(self) -> str:
        return {
            Stage.RAW: "Raw Score",
            Stage.NO_OUT_OF_SCOPE: "No Out-of-Scope",
            Stage.NO_REDUNDANCY: "No Redundancy",
        }[self]


@dataclass(frozen=True)
class ResolvedItem:
    """One output item of a stage: original item or merged group."""

    ids: tuple[str, ...]
    label: MappingLabel
    reason: str
    flagged: bool = False


@dataclass
class SideStage:
    """Resolved labels of one side (E or T) at one stage."""

    stage: Stage
    side: str
    items: list[ResolvedItem] = field(default_factory=list)

    @property
    def counts(self) -> LabelCounts:
        return LabelCounts.from_labels(item.label for item in self.items)


def _ordered_active_ids(mapping: MappingSet, dataset: Dataset | None) -> list[str]:
    if dataset is not None:
        return [item.id for item in dataset.active_items()]
    return list(mapping.records)


def raw_stage(mapping: MappingSet, dataset: Dataset | None = None) -> SideStage:
    """Stage 1: the labeler's labels, one resolved item per active item."""
    items = [
        ResolvedItem(ids=(item_id,), label=mapping.records[item_id].label, reason="as labeled")
        for item_id in _ordered_active_ids(mapping, dataset)
    ]
    return SideStage(stage=Stage.RAW, side=mapping.primary_set.value, items=items)


def raw_counts(mapping: MappingSet, dataset: Dataset | None = None) -> LabelCounts:
    """Label counts over all non-excluded primary items."""
    return raw_stage(mapping, dataset).counts


def apply_scope_votes(
    mapping: MappingSet, votes: list[ScopeVoteRecord]
) -> MappingSet:
    """Stage 2 on the mapping itself: fold the 3-rater majority vote in.

    An item ends up out_of_scope iff the majority voted it out OR the
    labeler already marked it out_of_scope (the labeler's out-of-scope
    decision is defaulted to even against an in-scope majority). Unvoted
    items keep their label; the total item count never changes.
    """
    votes_by_id = {}
    for record in votes:
        if record.item not in mapping.records:
            raise UnknownItem(f"vote for unknown item {record.item!r}")
        votes_by_id[record.item] = record

    records = {}
    for item_id, record in mapping.records.items():
        vote = votes_by_id.get(item_id)
        if (
            vote is not None
            and not vote.majority_in_scope
            and record.label is not MappingLabel.OUT_OF_SCOPE
        ):
            records[item_id] = replace(record, label=MappingLabel.OUT_OF_SCOPE)
        else:
            records[item_id] = record
    return MappingSet(
        primary_set=mapping.primary_set,
        secondary_set=mapping.secondary_set,
        records=records,
    )


def vote_stage(
    mapping: MappingSet,
    votes: list[ScopeVoteRecord],
    dataset: Dataset | None = None,
) -> tuple[MappingSet, SideStage]:
    """apply_scope_votes plus a per-item audit of why each label stands."""
    voted = apply_scope_votes(mapping, votes)
    votes_by_id = {record.item: record for record in votes}

    items = []
    for item_id in _ordered_active_ids(mapping, dataset):
        original = mapping.records[item_id].label
        final = voted.records[item_id].label
        vote = votes_by_id.get(item_id)
        if vote is None:
            reason = "no vote record; label kept"
        elif original is MappingLabel.OUT_OF_SCOPE:
            if vote.majority_in_scope:
                reason = "majority voted in-scope but labeler's out_of_scope is defaulted to"
            else:
                reason = "out_of_scope confirmed by majority"
        elif final is MappingLabel.OUT_OF_SCOPE:
            reason = f"majority voted out-of-scope (was {original.value})"
        else:
            reason = "majority voted in-scope; label kept"
        items.append(ResolvedItem(ids=(item_id,), label=final, reason=reason))
    side = SideStage(
        stage=Stage.NO_OUT_OF_SCOPE, side=mapping.primary_set.value, items=items
    )
    return voted, side


def merge_redundant(
    mapping: MappingSet,
    grouping: RedundancyGrouping | None,
    config: MergeConfig,
    dataset: Dataset | None = None,
    secondary_size: int = 0,
) -> SideStage:
    """Stage 3: collapse each redundant group to one synthetic item.

    Call with the post-vote mapping. Label selection per group excludes
    members that sit in more than one group (their label cannot be tied to
    this group) and members linked to at least ``broad_link_threshold``
    secondary items (too broad to characterize the group). If that
    excludes every member, the full multiset is used instead and the
    group is flagged for review. Ungrouped items pass through unchanged;
    the output holds one item per group plus every ungrouped item.
    """
    if grouping is None or not grouping.groups:
        base = raw_stage(mapping, dataset)
        return SideStage(
            stage=Stage.NO_REDUNDANCY, side=mapping.primary_set.value, items=base.items
        )

    membership = grouping.membership_counts()
    for item_id in membership:
        if item_id not in mapping.records:
            raise UnknownItem(f"grouping references unknown item {item_id!r}")

    threshold = resolve_broad_link_threshold(config, secondary_size)
    active_ids = _ordered_active_ids(mapping, dataset)
    position = {item_id: i for i, item_id in enumerate(active_ids)}

    def exclusion_reasons(item_id: str) -> list[str]:
        reasons = []
        if membership.get(item_id, 0) > 1:
            reasons.append(f"{item_id}: member of multiple groups")
        if len(mapping.records[item_id].secondary_refs) >= threshold:
            reasons.append(
                f"{item_id}: linked to "
                f"{len(mapping.records[item_id].secondary_refs)} secondary items "
                f"(threshold {threshold})"
            )
        return reasons

    outputs: list[tuple[int, ResolvedItem]] = []
    for group in grouping.groups:
        counted = [m for m in group if m in position]
        if not counted:  # group made only of excluded-flag items
            continue
        all_labels = [mapping.records[m].label for m in counted]
        notes: list[str] = []
        candidates = []
        for member in counted:
            reasons = exclusion_reasons(member)
            if reasons:
                notes.extend(reasons)
            else:
                candidates.append(mapping.records[member].label)
        flagged = not candidates
        if flagged:
            candidates = all_labels
            notes.append("every member label excluded; fell back to full multiset")
        label = group_label(candidates)
        reason = f"merged group of {len(counted)}"
        if notes:
            reason += " (" + "; ".join(notes) + ")"
        outputs.append(
            (
                min(position[m] for m in counted),
                ResolvedItem(ids=tuple(counted), label=label, reason=reason, flagged=flagged),
            )
        )

    for item_id in active_ids:
        if item_id not in membership:
            outputs.append(
                (
                    position[item_id],
                    ResolvedItem(
                        ids=(item_id,),
                        label=mapping.records[item_id].label,
                        reason="not in any redundant group",
                    ),
                )
            )

    outputs.sort(key=lambda pair: pair[0])
    return SideStage(
        stage=Stage.NO_REDUNDANCY,
        side=mapping.primary_set.value,
        items=[item for _, item in outputs],
    )
