"""JSON document I/O for the four observation document kinds, plus CSV.

Schemas (see docs/formats.md for the full reference):

* dataset:  {"name", "source_set", "subject_paper", "items": [...]}
* mapping:  {"primary_set", "secondary_set", "records": [...]}
* votes:    {"dataset", "records": [{"item", "votes": [b, b, b]}]}
* grouping: {"dataset", "groups": [[id, ...], ...]}

All loaders validate cross-references and field contracts; ParseError is
reserved for structurally unreadable documents.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from ethicskb.errors import ContractError, CrossRefError, ParseError
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


def _as_object(doc, what: str) -> dict:
    if not isinstance(doc, dict):
        raise ParseError(f"{what} document must be a JSON object")
    return doc


def _source_set(value, where: str) -> SourceSet:
    try:
        return SourceSet(value)
    except ValueError:
        raise ParseError(f"{where}: source set must be 'E' or 'T', got {value!r}")


def dataset_from_document(doc: dict) -> Dataset:
    doc = _as_object(doc, "dataset")
    source_set = _source_set(doc.get("source_set"), "dataset")
    raw_items = doc.get("items")
    if not isinstance(raw_items, list):
        raise ParseError("dataset: 'items' must be a list")

    items: list[ObservationItem] = []
    seen: set[str] = set()
    for entry in raw_items:
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), str):
            raise ParseError("dataset: every item needs a string 'id'")
        item_id = entry["id"]
        if item_id in seen:
            raise ContractError(f"dataset: duplicate item id {item_id!r}")
        seen.add(item_id)
        item_source = entry.get("source_set", source_set.value)
        if _source_set(item_source, f"item {item_id}") is not source_set:
            raise ContractError(
                f"item {item_id!r}: source_set differs from the dataset's"
            )
        kb_leaf_ref = entry.get("kb_leaf_ref")
        if kb_leaf_ref is not None and source_set is not SourceSet.TOOL:
            raise ContractError(
                f"item {item_id!r}: kb_leaf_ref is only valid on T items"
            )
        items.append(
            ObservationItem(
                id=item_id,
                source_set=source_set,
                text=entry.get("text", "") or "",
                kb_leaf_ref=kb_leaf_ref,
                parent_id=entry.get("parent_id"),
                excluded=bool(entry.get("excluded", False)),
                note=entry.get("note"),
            )
        )

    for item in items:
        if item.parent_id is not None and item.parent_id not in seen:
            raise CrossRefError(
                f"item {item.id!r}: parent_id {item.parent_id!r} not in dataset"
            )
    _check_parent_cycles(items)

    return Dataset(
        name=doc.get("name", ""),
        source_set=source_set,
        subject_paper=doc.get("subject_paper", ""),
        items=items,
    )


def _check_parent_cycles(items: list[ObservationItem]) -> None:
    parent = {item.id: item.parent_id for item in items}
    for start in parent:
        seen_chain = {start}
        current = parent[start]
        while current is not None:
            if current in seen_chain:
                raise ContractError(f"item {start!r}: parent chain forms a cycle")
            seen_chain.add(current)
            current = parent.get(current)


def dataset_to_document(dataset: Dataset) -> dict:
    items = []
    for item in dataset.items:
        entry: dict = {
            "id": item.id,
            "source_set": item.source_set.value,
            "text": item.text,
        }
        if item.kb_leaf_ref is not None:
            entry["kb_leaf_ref"] = item.kb_leaf_ref
        if item.parent_id is not None:
            entry["parent_id"] = item.parent_id
        if item.excluded:
            entry["excluded"] = True
        if item.note is not None:
            entry["note"] = item.note
        items.append(entry)
    return {
        "name": dataset.name,
        "source_set": dataset.source_set.value,
        "subject_paper": dataset.subject_paper,
        "items": items,
    }


def dataset_to_csv(dataset: Dataset) -> str:
    """Spreadsheet export: one row per item (id, source_set, text, parent_id)."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["id", "source_set", "text", "parent_id"])
    for item in dataset.items:
        writer.writerow([item.id, item.source_set.value, item.text, item.parent_id or ""])
    return buffer.getvalue()


def mapping_from_document(
    doc: dict, primary: Dataset, secondary: Dataset
) -> MappingSet:
    """Load one labeling direction and validate it against both datasets.

    Every non-excluded primary item must have exactly one record; records
    for excluded items are accepted but ignored by all counts.
    """
    doc = _as_object(doc, "mapping")
    primary_set = _source_set(doc.get("primary_set"), "mapping")
    secondary_set = _source_set(doc.get("secondary_set"), "mapping")
    if primary_set is secondary_set:
        raise ContractError("mapping: primary and secondary set must differ")
    if primary_set is not primary.source_set:
        raise ContractError(
            f"mapping: primary_set {primary_set.value!r} does not match the "
            f"primary dataset ({primary.source_set.value!r})"
        )
    raw_records = doc.get("records")
    if not isinstance(raw_records, list):
        raise ParseError("mapping: 'records' must be a list")

    primary_ids = primary.ids()
    secondary_ids = secondary.ids()
    records: dict[str, MappingRecord] = {}
    for entry in raw_records:
        if not isinstance(entry, dict) or not isinstance(entry.get("primary_item"), str):
            raise ParseError("mapping: every record needs a string 'primary_item'")
        item_id = entry["primary_item"]
        if item_id not in primary_ids:
            raise CrossRefError(f"mapping: unknown primary item {item_id!r}")
        if item_id in records:
            raise ContractError(f"mapping: item {item_id!r} has more than one record")
        try:
            label = MappingLabel(entry.get("label"))
        except ValueError:
            raise ParseError(
                f"mapping: record {item_id!r} has unknown label {entry.get('label')!r}"
            )
        refs = entry.get("secondary_refs", [])
        if not isinstance(refs, list) or any(not isinstance(r, str) for r in refs):
            raise ParseError(f"mapping: record {item_id!r}: bad 'secondary_refs'")
        for ref in refs:
            if ref not in secondary_ids:
                raise CrossRefError(
                    f"mapping: record {item_id!r} references unknown secondary "
                    f"item {ref!r}"
                )
        records[item_id] = _checked_record(
            MappingRecord(
                primary_item=item_id,
                label=label,
                secondary_refs=tuple(refs),
                rationale=entry.get("rationale"),
            )
        )

    missing = sorted(
        item.id for item in primary.active_items() if item.id not in records
    )
    if missing:
        raise ContractError(f"mapping: items without a record: {', '.join(missing)}")
    return MappingSet(
        primary_set=primary_set, secondary_set=secondary_set, records=records
    )


def _checked_record(record: MappingRecord) -> MappingRecord:
    if record.label in (MappingLabel.PLUS_ALPHA, MappingLabel.SHARED):
        if not record.secondary_refs:
            raise ContractError(
                f"record {record.primary_item!r}: label "
                f"{record.label.value!r} requires secondary_refs"
            )
    if record.label is MappingLabel.UNIQUE and record.secondary_refs:
        raise ContractError(
            f"record {record.primary_item!r}: label 'unique' forbids secondary_refs"
        )
    return record


def mapping_to_document(mapping: MappingSet) -> dict:
    records = []
    for record in mapping.records.values():
        entry: dict = {
            "primary_item": record.primary_item,
            "label": record.label.value,
            "secondary_refs": list(record.secondary_refs),
        }
        if record.rationale is not None:
            entry["rationale"] = record.rationale
        records.append(entry)
    return {
        "primary_set": mapping.primary_set.value,
        "secondary_set": mapping.secondary_set.value,
        "records": records,
    }


def votes_from_document(doc: dict, dataset: Dataset | None = None) -> list[ScopeVoteRecord]:
    doc = _as_object(doc, "votes")
    raw_records = doc.get("records")
    if not isinstance(raw_records, list):
        raise ParseError("votes: 'records' must be a list")
    known = dataset.ids() if dataset is not None else None

    records = []
    seen: set[str] = set()
    for entry in raw_records:
        if not isinstance(entry, dict) or not isinstance(entry.get("item"), str):
            raise ParseError("votes: every record needs a string 'item'")
        item_id = entry["item"]
        if item_id in seen:
            raise ContractError(f"votes: item {item_id!r} voted more than once")
        seen.add(item_id)
        if known is not None and item_id not in known:
            raise CrossRefError(f"votes: unknown item {item_id!r}")
        votes = entry.get("votes")
        if not isinstance(votes, list) or any(not isinstance(v, bool) for v in votes):
            raise ParseError(f"votes: record {item_id!r}: 'votes' must be booleans")
        if len(votes) != 3:
            raise ContractError(
                f"votes: record {item_id!r} has {len(votes)} votes, expected exactly 3"
            )
        records.append(ScopeVoteRecord(item=item_id, votes=(votes[0], votes[1], votes[2])))
    return records


def votes_to_document(records: list[ScopeVoteRecord], dataset: SourceSet | None = None) -> dict:
    doc: dict = {}
    if dataset is not None:
        doc["dataset"] = dataset.value
    doc["records"] = [
        {"item": record.item, "votes": list(record.votes)} for record in records
    ]
    return doc


def grouping_from_document(doc: dict, dataset: Dataset) -> RedundancyGrouping:
    doc = _as_object(doc, "grouping")
    grouping_set = _source_set(doc.get("dataset"), "grouping")
    if grouping_set is not dataset.source_set:
        raise ContractError(
            f"grouping: dataset {grouping_set.value!r} does not match "
            f"{dataset.source_set.value!r}"
        )
    raw_groups = doc.get("groups")
    if not isinstance(raw_groups, list):
        raise ParseError("grouping: 'groups' must be a list")
    known = dataset.ids()

    groups: list[list[str]] = []
    for index, raw_group in enumerate(raw_groups):
        if not isinstance(raw_group, list) or any(
            not isinstance(member, str) for member in raw_group
        ):
            raise ParseError(f"grouping: group {index} must be a list of item ids")
        if len(raw_group) < 2:
            raise ContractError(f"grouping: group {index} has fewer than 2 members")
        if len(set(raw_group)) != len(raw_group):
            raise ContractError(f"grouping: group {index} lists an item twice")
        for member in raw_group:
            if member not in known:
                raise CrossRefError(f"grouping: unknown item {member!r} in group {index}")
        groups.append(list(raw_group))
    return RedundancyGrouping(dataset=grouping_set, groups=groups)


def grouping_to_document(grouping: RedundancyGrouping) -> dict:
    return {
        "dataset": grouping.dataset.value,
        "groups": [list(group) for group in grouping.groups],
    }


def hierarchy_check(dataset, mapping=None, grouping=None) -> list[str]:
    """Warn when a parent and all of its children score independently.

    The labeling scheme cannot account for a parent item and all of its
    children being in-scope, non-redundant contributions at once: they
    would all earn points for what is partly the same observation. Needs
    labels to say anything, so without a mapping this returns [].
    """
    if mapping is None:
        return []
    grouped: set[str] = set()
    if grouping is not None:
        grouped = set(grouping.membership_counts())

    def scores(item_id: str) -> bool:
        record = mapping.records.get(item_id)
        return (
            record is not None
            and record.label.scores_point
            and item_id not in grouped
        )

    children_of: dict[str, list[str]] = {}
    for item in dataset.active_items():
        if item.parent_id is not None:
            children_of.setdefault(item.parent_id, []).append(item.id)

    warnings = []
    for parent_id, children in children_of.items():
        if scores(parent_id) and all(scores(child) for child in children):
            warnings.append(
                f"item {parent_id!r} and all {len(children)} of its children "
                "carry point-scoring, non-redundant labels; coverage may "
                "double-count the same observation"
            )
    return warnings


def _read_json(path: str | Path, what: str) -> dict:
    raw = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: not valid JSON ({exc})") from exc


def load_dataset(path: str | Path) -> Dataset:
    return dataset_from_document(_read_json(path, "dataset"))


def load_mapping(path: str | Path, primary: Dataset, secondary: Dataset) -> MappingSet:
    return mapping_from_document(_read_json(path, "mapping"), primary, secondary)


def load_votes(path: str | Path, dataset: Dataset | None = None) -> list[ScopeVoteRecord]:
    return votes_from_document(_read_json(path, "votes"), dataset)


def load_grouping(path: str | Path, dataset: Dataset) -> RedundancyGrouping:
    return grouping_from_document(_read_json(path, "grouping"), dataset)
